//! Published reference values: the first Umemura polynomials written in
//! `xi = z + mu`, and the factored discriminants for `n = 2..6`.

use crate::exactpoly::BiPoly;

fn xi(k: u32) -> BiPoly {
    (BiPoly::z() + BiPoly::mu()).pow(k)
}

fn m(k: u32) -> BiPoly {
    BiPoly::mu().pow(k)
}

fn c(v: i64) -> BiPoly {
    BiPoly::from_int(v)
}

/// Listed `S_n(z; mu)` for `1 <= n <= 5`.
pub fn umemura_listed(n: u32) -> Option<BiPoly> {
    Some(match n {
        1 => xi(1),
        2 => xi(3) - m(1),
        3 => xi(6) - c(5) * m(1) * xi(3) + c(9) * m(1) * xi(1) - c(5) * m(2),
        4 => {
            xi(10) - c(15) * m(1) * xi(7) + c(63) * m(1) * xi(5) - c(225) * m(1) * xi(3)
                + c(315) * m(2) * xi(2)
                - c(175) * m(3) * xi(1)
                + c(36) * m(2)
        }
        5 => {
            xi(15) - c(35) * m(1) * xi(12) + c(252) * m(1) * xi(10) + c(175) * m(2) * xi(9)
                - c(2025) * m(1) * xi(8)
                + c(945) * m(2) * xi(7)
                - c(1225) * m(1) * (m(2) - c(9)) * xi(6)
                - c(26082) * m(2) * xi(5)
                + c(33075) * m(3) * xi(4)
                - c(350) * m(2) * (c(35) * m(2) + c(36)) * xi(3)
                + c(11340) * m(3) * xi(2)
                - c(225) * m(2) * (c(49) * m(2) - c(36)) * xi(1)
                + c(7) * m(3) * (c(875) * m(2) - c(828))
        }
        _ => return None,
    })
}

/// Listed discriminant of `S_n` as `(sign, [(prime, exp)], [(k, exp)])`,
/// `k = 0` standing for `mu` and `k > 0` for `mu^2 - k^2`.
pub type FactoredListing = (i8, Vec<(u64, u32)>, Vec<(u32, u32)>);

pub fn discriminant_listed(n: u32) -> Option<FactoredListing> {
    Some(match n {
        2 => (-1, vec![(3, 3)], vec![(0, 2)]),
        3 => (1, vec![(3, 12), (5, 5)], vec![(0, 6), (1, 2)]),
        4 => (1, vec![(3, 27), (5, 20), (7, 7)], vec![(0, 14), (1, 6), (2, 2)]),
        5 => (
            1,
            vec![(3, 66), (5, 45), (7, 28)],
            vec![(0, 26), (1, 14), (2, 6), (3, 2)],
        ),
        6 => (
            -1,
            vec![(3, 147), (5, 80), (7, 63), (11, 11)],
            vec![(0, 44), (1, 26), (2, 14), (3, 6), (4, 2)],
        ),
        _ => return None,
    })
}
