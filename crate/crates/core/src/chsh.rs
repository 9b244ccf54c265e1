//! Direct maximization of the CHSH expectation over measurement directions.
//!
//! This is the numerical counterpart of [`crate::quantifiers::bell_horodecki`]:
//! it never looks at the spectrum of `TᵀT`, it only evaluates
//! `Tr[B̂ ρ]` for explicit unit vectors `A₁, A₂, B₁, B₂`.
//!
//! The search runs in two stages:
//! 1. block coordinate ascent from a handful of axis-aligned starts, where
//!    each block (one of the four vectors) is replaced by the best direction
//!    on a `grid_n × 2·grid_n` polar/azimuthal grid;
//! 2. from the best start, cyclic coordinate descent over the eight angles
//!    with a golden-section line search per angle, `refine_iters` passes.
//!    Angles are taken in a tangent frame around each current vector.
//!
//! Ties are resolved towards the lowest grid index so the result is
//! deterministic.

use std::f64::consts::PI;

use crate::linalg::{ComplexMatrix4, Vec3, PAULI};
use crate::state::DensityMatrix;

pub const DEFAULT_GRID_N: usize = 24;
pub const DEFAULT_REFINE_ITERS: usize = 50;
const MAX_BLOCK_ROUNDS: usize = 200;
const GOLDEN_STEPS: usize = 60;

/// `c[i][j] = Re Tr[ρ (σ_i ⊗ σ_j)]` computed straight from the matrix.
fn correlations(rho: &DensityMatrix) -> [[f64; 3]; 3] {
    let mut c = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let op = ComplexMatrix4::kron(&PAULI[i], &PAULI[j]);
            c[i][j] = rho.matrix().trace_product(&op).re;
        }
    }
    c
}

fn direction(theta: f64, phi: f64) -> Vec3 {
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    [st * cp, st * sp, ct]
}

#[derive(Clone, Copy)]
struct Settings {
    // (theta, phi) for A1, A2, B1, B2
    angles: [[f64; 2]; 4],
}

impl Settings {
    fn vectors(&self) -> [Vec3; 4] {
        self.angles.map(|[t, p]| direction(t, p))
    }
}

/// `⟨A₁⊗B₁ + A₁⊗B₂ + A₂⊗B₁ − A₂⊗B₂⟩` for the given correlation table.
fn chsh_value(c: &[[f64; 3]; 3], v: &[Vec3; 4]) -> f64 {
    let corr = |a: &Vec3, b: &Vec3| -> f64 {
        let mut s = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                s += a[i] * c[i][j] * b[j];
            }
        }
        s
    };
    let [a1, a2, b1, b2] = v;
    corr(a1, b1) + corr(a1, b2) + corr(a2, b1) - corr(a2, b2)
}

struct Grid {
    points: Vec<([f64; 2], Vec3)>,
    step: f64,
}

impl Grid {
    fn new(grid_n: usize) -> Self {
        let mut points = Vec::with_capacity(grid_n * 2 * grid_n);
        for i in 0..grid_n {
            let theta = PI * i as f64 / (grid_n - 1) as f64;
            for j in 0..2 * grid_n {
                let phi = 2.0 * PI * j as f64 / (2 * grid_n) as f64;
                points.push(([theta, phi], direction(theta, phi)));
            }
        }
        Self { points, step: PI / grid_n as f64 }
    }
}

/// Replaces vector `k` by its best grid direction; returns the new value.
fn scan_block(c: &[[f64; 3]; 3], grid: &Grid, s: &mut Settings, k: usize) -> f64 {
    let mut v = s.vectors();
    let mut best = f64::NEG_INFINITY;
    let mut best_idx = 0;
    for (idx, (_, dir)) in grid.points.iter().enumerate() {
        v[k] = *dir;
        let val = chsh_value(c, &v);
        if val > best {
            best = val;
            best_idx = idx;
        }
    }
    s.angles[k] = grid.points[best_idx].0;
    best
}

fn block_ascent(c: &[[f64; 3]; 3], grid: &Grid, mut s: Settings) -> (Settings, f64) {
    let mut value = chsh_value(c, &s.vectors());
    for _ in 0..MAX_BLOCK_ROUNDS {
        let before = value;
        // B's first: the starts only fix the A's.
        for k in [2, 3, 0, 1] {
            value = scan_block(c, grid, &mut s, k);
        }
        if value <= before + 1e-15 {
            break;
        }
    }
    (s, value)
}

fn golden_max(f: impl Fn(f64) -> f64, lo: f64, hi: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (lo, hi);
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..GOLDEN_STEPS {
        if f1 >= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    if f1 >= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

fn normalized(v: Vec3) -> Vec3 {
    let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    [v[0] / n, v[1] / n, v[2] / n]
}

fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

/// Two unit vectors completing `v` to a right-handed orthonormal frame.
fn tangent_frame(v: &Vec3) -> (Vec3, Vec3) {
    let axis = if v[0].abs() < 0.9 { [1.0, 0.0, 0.0] } else { [0.0, 1.0, 0.0] };
    let e1 = normalized(cross(v, &axis));
    let e2 = cross(v, &e1);
    (e1, e2)
}

/// Rotates `v` by angle `x` towards the tangent direction `e`.
fn tilt(v: &Vec3, e: &Vec3, x: f64) -> Vec3 {
    let (s, c) = x.sin_cos();
    normalized([c * v[0] + s * e[0], c * v[1] + s * e[1], c * v[2] + s * e[2]])
}

/// Cyclic coordinate descent over the eight angles. Each angle is measured
/// in a tangent frame attached to the current vector, which avoids the
/// stalls polar coordinates show near the poles. The bracket halves only
/// after a pass whose moves all stayed well inside it.
fn refine(c: &[[f64; 3]; 3], s: Settings, mut value: f64, step: f64, iters: usize) -> f64 {
    let mut v = s.vectors();
    let mut h = step;
    for _ in 0..iters {
        let mut largest_move = 0.0f64;
        for k in 0..4 {
            for a in 0..2 {
                let (e1, e2) = tangent_frame(&v[k]);
                let e = if a == 0 { e1 } else { e2 };
                let eval = |x: f64| {
                    let mut t = v;
                    t[k] = tilt(&v[k], &e, x);
                    chsh_value(c, &t)
                };
                let (x, fx) = golden_max(eval, -h, h);
                if fx > value {
                    v[k] = tilt(&v[k], &e, x);
                    value = fx;
                    largest_move = largest_move.max(x.abs());
                }
            }
        }
        if largest_move < 0.5 * h {
            h = (0.5 * h).max(1e-9);
        }
    }
    value
}

/// Maximum of `|Tr[B̂ρ]|` over measurement directions, found numerically.
///
/// # Panics
///
/// If `grid_n < 12`.
pub fn chsh_brute_force(rho: &DensityMatrix, grid_n: usize, refine_iters: usize) -> f64 {
    assert!(grid_n >= 12, "grid_n must be at least 12, got {grid_n}");
    let c = correlations(rho);
    let grid = Grid::new(grid_n);

    let half = PI / 2.0;
    let x = [half, 0.0];
    let y = [half, half];
    let z = [0.0, 0.0];
    let starts = [(z, x), (x, y), (y, z), (x, z), (y, x), (z, y)];

    let mut best: Option<(Settings, f64)> = None;
    for (a1, a2) in starts {
        let s = Settings { angles: [a1, a2, z, z] };
        let (s, v) = block_ascent(&c, &grid, s);
        if best.is_none_or(|(_, bv)| v > bv) {
            best = Some((s, v));
        }
    }
    let (s, v) = best.expect("at least one start");
    refine(&c, s, v, grid.step, refine_iters).abs()
}
