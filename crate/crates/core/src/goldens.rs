//! Published irreducible decompositions of classes of a smooth cubic
//! surface, in the form they were printed.

/// (group, class label, printed decomposition).
pub const PRINTED_DECOMPOSITIONS: &[(&str, &str, &str)] = &[
    ("degree 2", "V", "1 + χ3"),
    ("degree 2", "S", "1 + (1 + χ3)L + L^2"),
    ("degree 2", "S^2", "1 + (2 + 2χ3)L + (4 + 2χ3 + χ9 + χ10)L^2 + (2 + 2χ3)L^3 + L^4"),
    ("degree 2", "S^(2)", "1 + (1 + χ3)L + (3 + χ3 + χ10)L^2 + (1 + χ3)L^3 + L^4"),
    ("degree 2", "S^[2]", "1 + (2 + χ3)L + (4 + 2χ3 + χ10)L^2 + (2 + χ3)L^3 + L^4"),
    ("degree 2", "F", "1 + χ3 + χ10"),
    ("degree 2", "Z", "1 + χ3 + χ8 + χ10 + χ16"),
    (
        "degree 3",
        "S^(3)",
        "1 + (1 + χ3)L + (3 + χ3 + χ10)L^2 + (3 + 3χ3 + 2χ10 + χ16)L^3 + (3 + χ3 + χ10)L^4 + (1 + χ3)L^5 + L^6",
    ),
    (
        "degree 3",
        "S×S^(2)",
        "1 + (2 + 2χ3)L + (6 + 3χ3 + χ9 + 2χ10)L^2 + (6 + 7χ3 + χ9 + 3χ10 + χ16 + χ20)L^3 \
         + (6 + 3χ3 + χ9 + 2χ10)L^4 + (2 + 2χ3)L^5 + L^6",
    ),
    (
        "degree 3",
        "S^3",
        "1 + (3 + 3χ3)L + (9 + 6χ3 + 3χ9 + 3χ10)L^2 + (10 + 12χ3 + 3χ9 + 4χ10 + χ12 + χ16 + 2χ20)L^3 \
         + (9 + 6χ3 + 3χ9 + 3χ10)L^4 + (1 + χ3)L^5 + L^6",
    ),
    (
        "degree 4",
        "S^(4)",
        "1 + (1 + χ3)L + (3 + χ3 + χ10)L^2 + (3 + 3χ3 + 2χ10 + χ16)L^3 + (6 + 4χ3 + χ8 + 5χ10 + χ16 + χ20)L^4 \
         + (3 + 3χ3 + 2χ10 + χ16)L^5 + (3 + χ3 + χ10)L^6 + (1 + χ3)L^7 + L^8",
    ),
    (
        "degree 4",
        "S×S^(3)",
        "1 + (2 + 2χ3)L + (6 + 3χ3 + χ9 + 2χ10)L^2 + (8 + 9χ3 + χ9 + 5χ10 + 2χ16 + χ20)L^3 \
         + (12 + 10χ3 + χ8 + 3χ9 + 10χ10 + 3χ16 + 3χ20 + χ23)L^4 + (8 + 9χ3 + χ9 + 5χ10 + 2χ16 + χ20)L^5 \
         + (6 + 3χ3 + χ9 + 2χ10)L^6 + (2 + 2χ3)L^7 + L^8",
    ),
    (
        "degree 4",
        "S^4",
        "1 + (4χ3 + 4)L + (12χ3 + 6χ9 + 6χ10 + 16)L^2 + (36χ3 + 12χ9 + 16χ10 + 4χ12 + 4χ16 + 8χ20 + 28)L^3 \
         + (41χ3 + χ7 + χ8 + 24χ9 + 29χ10 + 4χ12 + 2χ13 + 7χ16 + 2χ17 + 12χ20 + 3χ23 + 3χ25 + 40)L^4 \
         + (36χ3 + 12χ9 + 16χ10 + 4χ12 + 4χ16 + 8χ20 + 28)L^5 + (12χ3 + 6χ9 + 6χ10 + 16)L^6 + (4χ3 + 4)L^7 + L^8",
    ),
    (
        "degree 4",
        "S^(2)×S^(2)",
        "1 + (2χ3 + 2)L + (4χ3 + χ9 + 3χ10 + 8)L^2 + (12χ3 + 2χ9 + 6χ10 + 2χ16 + 2χ20 + 10)L^3 \
         + (13χ3 + χ8 + 4χ9 + 13χ10 + χ13 + 3χ16 + χ17 + 4χ20 + χ23 + 17)L^4 \
         + (12χ3 + 2χ9 + 6χ10 + 2χ16 + 2χ20 + 10)L^5 + (4χ3 + χ9 + 3χ10 + 8)L^6 + (2χ3 + 2)L^7 + L^8",
    ),
    (
        "degree 4",
        "S^2×S^(2)",
        "1 + (3χ3 + 3)L + (7χ3 + 3χ9 + 4χ10 + 11)L^2 + (21χ3 + 5χ9 + 10χ10 + χ12 + 3χ16 + 4χ20 + 17)L^3 \
         + (23χ3 + χ8 + 11χ9 + 19χ10 + χ12 + χ13 + 5χ16 + χ17 + 7χ20 + 2χ23 + χ25 + 25)L^4 \
         + (21χ3 + 5χ9 + 10χ10 + χ12 + 3χ16 + 4χ20 + 17)L^5 + (7χ3 + 3χ9 + 4χ10 + 11)L^6 + (3χ3 + 3)L^7 + L^8",
    ),
    ("Hilbert form", "S^[2]", "1 + (2 + χ3)L + (4 + 2χ3 + χ10)L^2 + (2 + χ3)L^3 + L^4"),
    (
        "Hilbert form",
        "S^[3]",
        "1 + (2 + χ3)L + (5 + 3χ3 + χ10)L^2 + (7 + 5χ3 + χ9 + 3χ10 + χ16)L^3 + (5 + 3χ3 + χ10)L^4 \
         + (2 + χ3)L^5 + L^6",
    ),
    (
        "Hilbert form",
        "S^[4]",
        "1 + (2 + χ3)L + (6 + 3χ3 + χ10)L^2 + (10 + 7χ3 + χ9 + 4χ10 + χ16)L^3 \
         + (15 + 12χ3 + χ8 + χ9 + 9χ10 + 2χ16 + 2χ20)L^4 + (10 + 7χ3 + χ9 + 4χ10 + χ16)L^5 \
         + (6 + 3χ3 + χ10)L^6 + (2 + χ3)L^7 + L^8",
    ),
    (
        "Hilbert form",
        "S×S^[2]",
        "1 + (3 + 2χ3)L + (8 + 5χ3 + χ9 + 2χ10)L^2 + (10 + 9χ3 + 2χ9 + 4χ10 + χ16 + χ20)L^3 \
         + (8 + 5χ3 + χ9 + 2χ10)L^4 + (3 + 2χ3)L^5 + L^6",
    ),
];
