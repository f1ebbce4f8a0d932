//! Published reference data shared by the integration tests.
#![allow(dead_code)]

/// First row and first column (below the corner) of the eighteen standard
/// 3-Young tableaux of shape lambda(11,5) in V^3_3, in index order.
pub const LAMBDA_11_5_FILLINGS: [([u64; 6], [u64; 5]); 18] = [
    ([1, 1, 3, 4, 5, 6], [2, 3, 4, 5, 6]),
    ([1, 1, 3, 4, 5, 5], [2, 3, 4, 6, 6]),
    ([1, 1, 3, 4, 6, 6], [2, 3, 4, 5, 5]),
    ([1, 1, 3, 3, 5, 6], [2, 4, 4, 5, 6]),
    ([1, 1, 3, 3, 5, 5], [2, 4, 4, 6, 6]),
    ([1, 1, 3, 3, 6, 6], [2, 4, 4, 5, 5]),
    ([1, 1, 4, 4, 5, 6], [2, 3, 3, 5, 6]),
    ([1, 1, 4, 4, 5, 5], [2, 3, 3, 6, 6]),
    ([1, 1, 4, 4, 6, 6], [2, 3, 3, 5, 5]),
    ([1, 2, 3, 4, 5, 6], [1, 3, 4, 5, 6]),
    ([1, 2, 3, 4, 5, 5], [1, 3, 4, 6, 6]),
    ([1, 2, 3, 4, 6, 6], [1, 3, 4, 5, 5]),
    ([1, 2, 3, 3, 5, 6], [1, 4, 4, 5, 6]),
    ([1, 2, 3, 3, 5, 5], [1, 4, 4, 6, 6]),
    ([1, 2, 3, 3, 6, 6], [1, 4, 4, 5, 5]),
    ([1, 2, 4, 4, 5, 6], [1, 3, 3, 5, 6]),
    ([1, 2, 4, 4, 5, 5], [1, 3, 3, 6, 6]),
    ([1, 2, 4, 4, 6, 6], [1, 3, 3, 5, 5]),
];

/// Exponent `a` of the diagonal image `g^a tau^9` of `(P_j, P_j)`.
pub const LAMBDA_11_5_DIAGONAL: [u64; 18] = [1, 2, 4, 8, 16, 5, 10, 20, 13, 26, 25, 23, 19, 11, 22, 17, 7, 14];

/// `g^a tau^b` as `(a, b)`.
pub type Entry = (u64, u64);

/// Printed 2x2 matrices of lambda(15,k) in W^3_1 at p = 3: `(k, l, [[(a, b); 2]; 2])`
/// with entries `g^a tau^b`, exactly as displayed.
pub const LAMBDA_15_MATRICES: [(u64, u64, [[Entry; 2]; 2]); 9] = [
    (7, 0, [[(9, 9), (9, 10)], [(18, 8), (18, 9)]]),
    (6, 4, [[(9, 17), (9, 0)], [(18, 16), (18, 17)]]),
    (5, 5, [[(9, 1), (9, 2)], [(18, 0), (18, 1)]]),
    (4, 3, [[(9, 15), (9, 16)], [(18, 14), (18, 15)]]),
    (3, 7, [[(9, 5), (9, 6)], [(18, 6), (18, 5)]]),
    (8, 2, [[(9, 13), (9, 14)], [(18, 12), (18, 13)]]),
    (9, 1, [[(9, 11), (9, 12)], [(18, 10), (18, 11)]]),
    (10, 6, [[(9, 3), (9, 4)], [(18, 2), (18, 3)]]),
    (11, 8, [[(9, 7), (9, 8)], [(18, 6), (18, 7)]]),
];
