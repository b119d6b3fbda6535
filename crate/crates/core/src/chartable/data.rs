// Transcribed from the published E6 Weyl group character table and the table
// of Z2 x| (S3 x S3) inside S6. Columns are 1-based in all public APIs.

pub(crate) const E6_ORDERS: [u32; 25] = [1, 2, 2, 2, 2, 3, 3, 3, 4, 4, 4, 4, 5, 6, 6, 6, 6, 6, 6, 6, 8, 9, 10, 12, 12];

pub(crate) const E6_POWER_2: [usize; 25] = [1, 1, 1, 1, 1, 6, 7, 8, 3, 4, 4, 4, 13, 6, 7, 7, 8, 8, 7, 8, 9, 22, 13, 19, 14];
pub(crate) const E6_POWER_3: [usize; 25] = [1, 2, 3, 4, 5, 1, 1, 1, 9, 10, 11, 12, 13, 3, 3, 2, 3, 2, 4, 5, 21, 6, 23, 10, 9];
pub(crate) const E6_POWER_5: [usize; 25] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 1, 14, 15, 16, 17, 18, 19, 20, 21, 22, 2, 24, 25];

#[rustfmt::skip]
pub(crate) const E6_VALUES: [[i64; 25]; 25] = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, -1, 1, 1, -1, 1, 1, 1, 1, -1, -1, 1, 1, 1, 1, -1, 1, -1, 1, -1, -1, 1, -1, -1, 1],
    [6, 4, -2, 2, 0, -3, 3, 0, 2, -2, 2, 0, 1, 1, 1, 1, -2, -2, -1, 0, 0, 0, -1, 1, -1],
    [6, -4, -2, 2, 0, -3, 3, 0, 2, 2, -2, 0, 1, 1, 1, -1, -2, 2, -1, 0, 0, 0, 1, -1, -1],
    [10, 0, -6, 2, 0, 1, -2, 4, 2, 0, 0, -2, 0, -3, 0, 0, 0, 0, 2, 0, 0, 1, 0, 0, -1],
    [15, -5, 7, 3, -1, -3, 0, 3, -1, -3, 1, 1, 0, 1, -2, -2, 1, 1, 0, -1, 1, 0, 0, 0, -1],
    [15, -5, -1, -1, 3, 6, 3, 0, 3, -1, -1, -1, 0, 2, -1, 1, 2, -2, -1, 0, 1, 0, 0, -1, 0],
    [15, 5, 7, 3, 1, -3, 0, 3, -1, 3, -1, 1, 0, 1, -2, 2, 1, -1, 0, 1, -1, 0, 0, 0, -1],
    [15, 5, -1, -1, -3, 6, 3, 0, 3, 1, 1, -1, 0, 2, -1, -1, 2, 2, -1, 0, -1, 0, 0, 1, 0],
    [20, 10, 4, 4, 2, 2, 5, -1, 0, 2, 2, 0, 0, -2, 1, 1, 1, 1, 1, -1, 0, -1, 0, -1, 0],
    [20, -10, 4, 4, -2, 2, 5, -1, 0, -2, -2, 0, 0, -2, 1, -1, 1, -1, 1, 1, 0, -1, 0, 1, 0],
    [20, 0, 4, -4, 0, -7, 2, 2, 4, 0, 0, 0, 0, 1, -2, 0, -2, 0, 2, 0, 0, -1, 0, 0, 1],
    [24, 4, 8, 0, 4, 6, 0, 3, 0, 0, 0, 0, -1, 2, 2, -2, -1, 1, 0, 1, 0, 0, -1, 0, 0],
    [24, -4, 8, 0, -4, 6, 0, 3, 0, 0, 0, 0, -1, 2, 2, 2, -1, -1, 0, -1, 0, 0, 1, 0, 0],
    [30, -10, -10, 2, 2, 3, 3, 3, -2, 4, 0, 0, 0, -1, -1, -1, -1, -1, -1, -1, 0, 0, 0, 1, 1],
    [30, 10, -10, 2, -2, 3, 3, 3, -2, -4, 0, 0, 0, -1, -1, 1, -1, 1, -1, 1, 0, 0, 0, -1, 1],
    [60, 10, -4, 4, 2, 6, -3, -3, 0, -2, -2, 0, 0, 2, -1, 1, -1, 1, 1, -1, 0, 0, 0, 1, 0],
    [60, -10, -4, 4, -2, 6, -3, -3, 0, 2, 2, 0, 0, 2, -1, -1, -1, -1, 1, 1, 0, 0, 0, -1, 0],
    [60, 0, 12, 4, 0, -3, -6, 0, 4, 0, 0, 0, 0, -3, 0, 0, 0, 0, -2, 0, 0, 0, 0, 0, 1],
    [64, 16, 0, 0, 0, -8, 4, -2, 0, 0, 0, 0, -1, 0, 0, -2, 0, -2, 0, 0, 0, 1, 1, 0, 0],
    [64, -16, 0, 0, 0, -8, 4, -2, 0, 0, 0, 0, -1, 0, 0, 2, 0, 2, 0, 0, 0, 1, -1, 0, 0],
    [80, 0, -16, 0, 0, -10, -4, 2, 0, 0, 0, 0, 0, 2, 2, 0, 2, 0, 0, 0, 0, -1, 0, 0, 0],
    [81, 9, 9, -3, -3, 0, 0, 0, -3, 3, -1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 0],
    [81, -9, 9, -3, 3, 0, 0, 0, -3, -3, 1, -1, 1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0],
    [90, 0, -6, -6, 0, 9, 0, 0, 2, 0, 0, 2, 0, -3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1],
];

pub(crate) const A2_CLASS_LABELS: [&str; 9] = [
    "()", "(56)", "(456)", "(23)(56)", "(23)(456)", "(123)(456)", "(14)(25)(36)", "(14)(2536)", "(142536)",
];

#[rustfmt::skip]
pub(crate) const A2_VALUES: [[i64; 9]; 9] = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, -1, 1, 1, -1, 1, -1, 1, -1],
    [1, -1, 1, 1, -1, 1, 1, -1, 1],
    [1, 1, 1, 1, 1, 1, -1, -1, -1],
    [2, 0, 2, -2, 0, 2, 0, 0, 0],
    [4, -2, 1, 0, 1, -2, 0, 0, 0],
    [4, 0, -2, 0, 0, 1, -2, 0, 1],
    [4, 0, -2, 0, 0, 1, 2, 0, -1],
    [4, 2, 1, 0, -1, -2, 0, 0, 0],
];
