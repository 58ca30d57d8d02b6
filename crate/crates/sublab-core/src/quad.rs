//! Adaptive Gauss–Kronrod quadrature for real and complex integrands, with
//! oscillation-aware pre-splitting: when a phase function is supplied, the
//! initial panels are sized so each one sees a bounded phase increment before
//! the usual error-driven refinement takes over.

use crate::{Complex64, Error, Result};
use std::collections::BinaryHeap;

// 15-point Kronrod abscissae on [-1,1] (positive half) with the embedded
// 7-point Gauss rule. Standard QUADPACK constants.
const XGK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];
const WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

/// One GK15 pass over [a, b]: (kronrod value, error estimate, integral of |f|).
pub fn gk15<F: FnMut(f64) -> Complex64>(f: &mut F, a: f64, b: f64) -> (Complex64, f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut kron = Complex64::new(0.0, 0.0);
    let mut gauss = Complex64::new(0.0, 0.0);
    let mut resabs = 0.0;
    let fc = f(center);
    kron += WGK[7] * fc;
    resabs += WGK[7] * fc.norm();
    gauss += WG[3] * fc;
    for j in 0..7 {
        let x = half * XGK[j];
        let f1 = f(center - x);
        let f2 = f(center + x);
        kron += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.norm() + f2.norm());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let err = ((kron - gauss) * half).norm();
    // standard rescaling so the estimate is not wildly optimistic
    let err = if err != 0.0 {
        let scale = (200.0 * err / (resabs * half.abs()).max(f64::MIN_POSITIVE)).powf(1.5);
        if scale < 1.0 {
            (resabs * half.abs() * scale).max(err * 1e-3)
        } else {
            err
        }
    } else {
        0.0
    };
    (kron * half, err.max((kron * half).norm() * 5e-16), resabs * half.abs())
}

#[derive(Debug)]
struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.err.partial_cmp(&other.err).unwrap_or(std::cmp::Ordering::Equal)
    }
}

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: Complex64,
    pub abs_err: f64,
    pub evals: usize,
}

impl QuadResult {
    pub fn re(&self) -> f64 {
        self.value.re
    }
}

/// Adaptive integration of `f` over `[a, b]` starting from the given panel
/// edges. Refines the worst panel until the summed error estimate is below
/// `max(abs_tol, rel_tol * |value|)` or the panel budget is exhausted.
pub fn adaptive_panels<F: FnMut(f64) -> Complex64>(
    f: &mut F,
    edges: &[f64],
    rel_tol: f64,
    abs_tol: f64,
    max_panels: usize,
) -> Result<QuadResult> {
    assert!(edges.len() >= 2);
    let mut heap = BinaryHeap::new();
    let mut evals = 0usize;
    for w in edges.windows(2) {
        let (v, e, _) = gk15(f, w[0], w[1]);
        evals += 15;
        heap.push(Panel { a: w[0], b: w[1], value: v, err: e });
    }
    loop {
        let total: Complex64 = heap.iter().map(|p| p.value).sum();
        let total_err: f64 = heap.iter().map(|p| p.err).sum();
        let target = abs_tol.max(rel_tol * total.norm());
        if total_err <= target || heap.len() >= max_panels {
            if total_err > target.max(1e-300) * 16.0 && heap.len() >= max_panels {
                return Err(Error::QuadratureFailure {
                    achieved: total_err,
                    requested: target,
                });
            }
            return Ok(QuadResult { value: total, abs_err: total_err, evals });
        }
        let worst = heap.pop().unwrap();
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // panel at floating-point resolution; accept as is
            let mut rest = heap.into_vec();
            let total: Complex64 =
                rest.iter().map(|p| p.value).sum::<Complex64>() + worst.value;
            let total_err: f64 = rest.iter().map(|p| p.err).sum::<f64>() + worst.err;
            rest.push(worst);
            return Ok(QuadResult { value: total, abs_err: total_err, evals });
        }
        let (v1, e1, _) = gk15(f, worst.a, mid);
        let (v2, e2, _) = gk15(f, mid, worst.b);
        evals += 30;
        heap.push(Panel { a: worst.a, b: mid, value: v1, err: e1 });
        heap.push(Panel { a: mid, b: worst.b, value: v2, err: e2 });
    }
}

/// Adaptive integration over [a, b] with a single starting panel.
pub fn integrate<F: FnMut(f64) -> Complex64>(
    f: &mut F,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_tol: f64,
) -> Result<QuadResult> {
    adaptive_panels(f, &[a, b], rel_tol, abs_tol, 20_000)
}

/// Real-valued convenience wrapper.
pub fn integrate_real<F: FnMut(f64) -> f64>(
    f: &mut F,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_tol: f64,
) -> Result<QuadResult> {
    integrate(&mut |x| Complex64::new(f(x), 0.0), a, b, rel_tol, abs_tol)
}

/// Builds panel edges over [a, b] so that the supplied phase (in radians)
/// advances by at most `max_inc` per panel, probing the phase on a fine grid.
pub fn phase_split_edges<P: Fn(f64) -> f64>(
    phase: P,
    a: f64,
    b: f64,
    max_inc: f64,
    max_edges: usize,
) -> Vec<f64> {
    let probes = 257;
    let mut edges = vec![a];
    let mut last_phase = phase(a);
    let mut acc = 0.0f64;
    for i in 1..probes {
        let x = a + (b - a) * i as f64 / (probes - 1) as f64;
        let ph = phase(x);
        acc += (ph - last_phase).abs();
        last_phase = ph;
        if acc >= max_inc && edges.len() < max_edges - 1 {
            edges.push(x);
            acc = 0.0;
        }
    }
    edges.push(b);
    // if the probe grid undersampled the oscillation, subdivide uniformly
    let total_est: f64 = {
        let mut t = 0.0;
        let mut lp = phase(a);
        for i in 1..probes {
            let x = a + (b - a) * i as f64 / (probes - 1) as f64;
            let ph = phase(x);
            t += (ph - lp).abs();
            lp = ph;
        }
        t
    };
    let want = ((total_est / max_inc).ceil() as usize + 1).min(max_edges);
    if want > edges.len() {
        let mut uniform: Vec<f64> = (0..=want)
            .map(|i| a + (b - a) * i as f64 / want as f64)
            .collect();
        uniform.dedup();
        return uniform;
    }
    edges.dedup();
    edges
}

/// Adaptive integration with oscillation-aware pre-splitting: initial panels
/// are chosen so the given phase advances about pi/4 per panel.
pub fn integrate_oscillatory<F: FnMut(f64) -> Complex64, P: Fn(f64) -> f64>(
    f: &mut F,
    phase: P,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_tol: f64,
) -> Result<QuadResult> {
    let edges = phase_split_edges(phase, a, b, std::f64::consts::FRAC_PI_4 * 4.0, 16_384);
    adaptive_panels(f, &edges, rel_tol, abs_tol, 120_000)
}
