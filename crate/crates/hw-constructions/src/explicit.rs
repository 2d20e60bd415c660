//! Piecewise cycle formulas on `Z_2 x Z_m`, transcribed term by term.
//!
//! Every function returns the point sequence of one directed cycle; the
//! callers assemble factors and the gate verifies them.

use crate::points::Point;

fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

/// The Hamilton cycle `v_i = (⌊i/m⌋, i)`, `0 ≤ i < 2m`.
pub(crate) fn layer_walk(m: i64) -> Vec<Point> {
    (0..2 * m).map(|i| (floor_div(i, m), i)).collect()
}

/// The `m`-cycle `(0, i)`, `0 ≤ i < m`.
pub(crate) fn base_cycle(m: i64) -> Vec<Point> {
    (0..m).map(|i| (0, i)).collect()
}

/// The `m`-cycle alternating layers: `(0, i)` for even `i`, `(1, i)` for odd.
pub(crate) fn alternating_cycle(m: i64) -> Vec<Point> {
    (0..m).map(|i| (i % 2, i)).collect()
}

/// The `m`-cycle zig-zagging around `m/2`: point 0 is `(0, 0)`; for
/// `i ≥ 1` the layer is `i mod 2` and the index `m/2 - ⌊i/2⌋` when
/// `i ≡ 1, 2 (mod 4)`, else `m/2 + ⌊i/2⌋`.
pub(crate) fn zigzag_cycle(m: i64) -> Vec<Point> {
    let mut c = vec![(0, 0)];
    for i in 1..m {
        let a = i % 2;
        let idx = if matches!(i % 4, 1 | 2) { m / 2 - i / 2 } else { m / 2 + i / 2 };
        c.push((a, idx));
    }
    c
}

/// Five-factor family on `C_m*[2] ⊕ I_2m*` for odd `m ≥ 5`: the first four
/// `2m`-cycles (the fifth is the residual).
pub(crate) fn blowup_i_odd_cycles(m: i64) -> [Vec<Point>; 4] {
    let n = 2 * m as usize;
    let v = layer_walk(m);
    let mut u = vec![(0, 0); n];
    for i in 0..m {
        u[(2 * i) as usize] = if i <= (m - 1) / 2 { (0, 2 * i) } else { (0, -2 * i - 1) };
        u[(2 * i + 1) as usize] = if i <= (m - 3) / 2 { (1, 2 * i + 1) } else { (1, -2 * i - 2) };
    }
    let mut x = vec![(0, 0); n];
    for i in 0..2 * m - 2 {
        let idx = m - i / 2;
        x[i as usize] = if matches!(i % 4, 0 | 3) { (0, idx) } else { (1, idx) };
    }
    x[n - 2] = (1, 1);
    x[n - 1] = (0, 1);
    let mut y = vec![(0, 0); n];
    for i in (0..m - 2).chain(m + 2..2 * m) {
        let (a, j) = u[i as usize];
        y[i as usize] = (a + 1, j + 2);
    }
    let mu = m as usize;
    y[mu - 2] = (1, 0);
    y[mu - 1] = (0, 1);
    y[mu] = (1, 1);
    y[mu + 1] = (0, 0);
    [v, u, x, y]
}

/// Five-factor family on `C_m*[2] ⊕ I_2m*` for even `m ≥ 6`: all five
/// `2m`-cycles `v, x, u, y, z`.
pub(crate) fn blowup_i_even_cycles(m: i64) -> [Vec<Point>; 5] {
    let n = 2 * m as usize;
    let v = layer_walk(m);

    let mut x = vec![(0, 0); n];
    for i in 1..2 * m - 7 {
        x[i as usize] = if matches!(i % 4, 1 | 2) {
            (0, m - (i + 2) / 2)
        } else {
            (1, m - (i + 2) / 2 + 1)
        };
    }
    for i in 0..3 {
        x[(2 * m - 6 + 2 * i) as usize] = (0, 3 - i);
    }
    for i in 0..4 {
        x[(2 * m - 7 + 2 * i) as usize] = (1, 3 - i);
    }

    let mut u = vec![(0, 0); n];
    u[1] = (1, 0);
    u[2] = (0, m - 1);
    for i in 3..2 * m - 8 {
        u[i as usize] = if matches!(i % 4, 0 | 1) {
            (0, m - (i - 1) / 2 - 1)
        } else {
            (1, m - (i - 1) / 2)
        };
    }
    for j in 0..8 {
        u[(2 * m - 8 + j) as usize] = if matches!(j % 4, 0 | 2) { (0, 4 - j / 2) } else { (1, 4 - j / 2) };
    }
    if m == 6 {
        u[3] = (1, 5);
    }

    let mut y = vec![(0, 0); n];
    for i in 1..m - 3 {
        y[(2 * i + 2) as usize] = (0, m - i);
    }
    for i in 1..m - 2 {
        y[(2 * i + 1) as usize] = (1, m - i);
    }
    y[1] = (1, 1);
    y[2] = (1, 0);
    y[n - 4] = (1, 2);
    y[n - 3] = (0, 3);
    y[n - 2] = (0, 2);
    y[n - 1] = (0, 1);

    let mut z = vec![(0, 0); n];
    for i in 1..m - 4 {
        z[(9 + 2 * i) as usize] = (0, 4 + i);
    }
    for i in 0..m - 5 {
        z[(10 + 2 * i) as usize] = (1, 4 + i);
    }
    let head = [(0, 0), (1, m - 1), (1, 0), (0, 1), (1, 2), (1, 1), (0, 2), (1, 3), (0, 4), (0, 3)];
    z[..10].copy_from_slice(&head);
    [v, x, u, y, z]
}

/// The two further `m`-cycles of the all-`m`-cycle family on `Γ_m*` for
/// `m ≡ 2 (mod 4)`.
pub(crate) fn gamma_cycle_pair(m: i64) -> [Vec<Point>; 2] {
    let c2: Vec<Point> =
        (0..m).map(|i| if i <= m / 2 { (1, m - 1 - i) } else { (0, m - 1 - i) }).collect();
    let mut c3: Vec<Point> = vec![(0, 0), (0, m / 2), (1, m / 2 + 1), (1, m / 2 - 1)];
    for i in 4..m {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        c3.push(if matches!(i % 4, 0 | 1) {
            (1, m / 2 - sign * (i / 2))
        } else {
            (0, m / 2 + sign * (i / 2))
        });
    }
    [c2, c3]
}

/// The interleaved `2m`-cycle `(0,0),(1,0),(0,1),(1,1),…`.
pub(crate) fn interleaved_walk(m: i64) -> Vec<Point> {
    (0..m).flat_map(|i| [(0, i), (1, i)]).collect()
}

/// The `2m`-cycle `(0,0),(0,m-1),…,(0,1),(1,0),(1,m-1),…,(1,1)`.
pub(crate) fn backward_walk(m: i64) -> Vec<Point> {
    let mut x = vec![(0, 0)];
    x.extend((0..m - 1).map(|i| (0, m - 1 - i)));
    x.push((1, 0));
    x.extend((0..m - 1).map(|j| (1, m - 1 - j)));
    x
}

/// The `2m`-cycle alternating layers on odd positions of the layer walk.
pub(crate) fn alternating_walk(m: i64) -> Vec<Point> {
    layer_walk(m)
        .into_iter()
        .enumerate()
        .map(|(i, (a, j))| if i % 2 == 0 { (a, j) } else { (a + 1, j) })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn distinct(m: i64, c: &[Point]) -> usize {
        c.iter().map(|&(a, i)| (a.rem_euclid(2), i.rem_euclid(m))).collect::<BTreeSet<_>>().len()
    }

    #[test]
    fn walks_visit_every_point_once() {
        for m in 3..=12 {
            let mut walks = vec![layer_walk(m), interleaved_walk(m), backward_walk(m)];
            let mut cycles = vec![base_cycle(m)];
            // The alternating shapes only close up for even lengths.
            if m % 2 == 0 {
                walks.push(alternating_walk(m));
                cycles.push(alternating_cycle(m));
            }
            for walk in walks {
                assert_eq!(walk.len() as i64, 2 * m);
                assert_eq!(distinct(m, &walk) as i64, 2 * m, "m={m}");
            }
            for c in cycles {
                assert_eq!(distinct(m, &c) as i64, m);
            }
        }
    }

    #[test]
    fn zigzag_covers_each_index_once() {
        for m in (4..=16).step_by(2) {
            let c = zigzag_cycle(m);
            let indices: BTreeSet<i64> = c.iter().map(|&(_, i)| i.rem_euclid(m)).collect();
            assert_eq!(indices.len() as i64, m, "m={m}");
        }
    }

    #[test]
    fn printed_shapes_of_small_cases() {
        assert_eq!(layer_walk(3), vec![(0, 0), (0, 1), (0, 2), (1, 3), (1, 4), (1, 5)]);
        assert_eq!(backward_walk(3), vec![(0, 0), (0, 2), (0, 1), (1, 0), (1, 2), (1, 1)]);
        assert_eq!(floor_div(-1, 4), -1);
    }
}
