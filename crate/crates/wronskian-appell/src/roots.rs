//! Simultaneous polynomial root finding (Durand-Kerner iteration), used to
//! track the zeros of rescaled polynomials toward their attractors.

use num_complex::Complex64;

use crate::error::{Error, Result};

const MAX_ITERATIONS: u32 = 500;

/// Default residual tolerance for [`numeric_roots`].
pub const DEFAULT_TOL: f64 = 1e-9;

/// Relative residual of a candidate root: `|p(z)|` scaled by the largest
/// coefficient magnitude and `max(1, |z|)^deg`.
pub fn relative_residual(coeffs: &[f64], z: Complex64) -> f64 {
    let deg = coeffs.len() - 1;
    let mut value = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        value = value * z + c;
    }
    let sup = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    value.norm() / (sup * z.norm().max(1.0).powi(deg as i32))
}

/// All complex roots of the polynomial with the given coefficients
/// (constant term first), found simultaneously.
///
/// Every returned root satisfies the relative-residual bound `tol`. The
/// iteration is seeded deterministically on a circle of radius
/// `1 + max|coeff| / |leading|`, so identical inputs give identical output;
/// roots are reported sorted by real then imaginary part.
pub fn numeric_roots(coeffs: &[f64], tol: f64) -> Result<Vec<Complex64>> {
    if coeffs.is_empty() {
        return Err(Error::invalid("empty coefficient list"));
    }
    let lead = *coeffs.last().unwrap();
    if lead == 0.0 {
        return Err(Error::invalid("leading coefficient must be nonzero"));
    }
    let degree = coeffs.len() - 1;
    if degree == 0 {
        return Ok(Vec::new());
    }

    // monic normalization for the update steps; residuals use the original
    let monic: Vec<Complex64> = coeffs
        .iter()
        .map(|&c| Complex64::new(c / lead, 0.0))
        .collect();
    let radius = 1.0 + coeffs
        .iter()
        .fold(0.0f64, |m, c| m.max(c.abs()))
        / lead.abs();
    let mut z: Vec<Complex64> = (0..degree)
        .map(|j| {
            let angle = 2.0 * std::f64::consts::PI * (j as f64) / (degree as f64) + 0.5;
            Complex64::from_polar(radius, angle)
        })
        .collect();

    let eval = |zs: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in monic.iter().rev() {
            acc = acc * zs + c;
        }
        acc
    };

    let mut iterations = 0;
    loop {
        let mut moved = 0.0f64;
        for j in 0..degree {
            let mut denom = Complex64::new(1.0, 0.0);
            for l in 0..degree {
                if l != j {
                    denom *= z[j] - z[l];
                }
            }
            if denom.norm() == 0.0 {
                // coincident iterates: nudge deterministically
                z[j] += Complex64::new(1e-8, 1e-8);
                moved = moved.max(1e-8);
                continue;
            }
            let step = eval(z[j]) / denom;
            z[j] -= step;
            moved = moved.max(step.norm());
        }
        iterations += 1;

        let worst = z
            .iter()
            .map(|&zj| relative_residual(coeffs, zj))
            .fold(0.0f64, f64::max);
        if worst <= tol {
            break;
        }
        if iterations >= MAX_ITERATIONS {
            return Err(Error::NonConvergence {
                residual: worst,
                iterations,
                best: z.iter().map(|c| (c.re, c.im)).collect(),
            });
        }
        if moved == 0.0 {
            // stalled below the step floor; accept only if residual is met
            return Err(Error::NonConvergence {
                residual: worst,
                iterations,
                best: z.iter().map(|c| (c.re, c.im)).collect(),
            });
        }
    }

    z.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_roots() {
        let roots = numeric_roots(&[-4.0, 0.0, 1.0], 1e-12).unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[0].re + 2.0).abs() < 1e-9 && roots[0].im.abs() < 1e-9);
        assert!((roots[1].re - 2.0).abs() < 1e-9 && roots[1].im.abs() < 1e-9);
    }

    #[test]
    fn degree_zero_has_no_roots() {
        assert!(numeric_roots(&[3.0], 1e-9).unwrap().is_empty());
        assert!(numeric_roots(&[0.0, 0.0], 1e-9).is_err());
        assert!(numeric_roots(&[], 1e-9).is_err());
    }

    #[test]
    fn clustered_multiple_roots() {
        // (x-5)^2 (x+4)^3 (x-20)^2 expanded; clusters recover the roots.
        // Multiple roots are recovered as tight clusters: the cluster mean is
        // far more accurate than the individual points.
        let factors: [(f64, usize); 3] = [(5.0, 2), (-4.0, 3), (20.0, 2)];
        let mut coeffs = vec![1.0]; // constant first throughout
        for &(root, mult) in &factors {
            for _ in 0..mult {
                // multiply by (x - root)
                let mut next = vec![0.0; coeffs.len() + 1];
                for (i, &c) in coeffs.iter().enumerate() {
                    next[i + 1] += c;
                    next[i] -= root * c;
                }
                coeffs = next;
            }
        }
        let roots = numeric_roots(&coeffs, 1e-13).unwrap();
        assert_eq!(roots.len(), 7);
        // residual contract holds at every root
        for &z in &roots {
            assert!(relative_residual(&coeffs, z) <= 1e-13);
        }
        // position accuracy at a root of multiplicity m scales like tol^(1/m):
        // measured spreads at this tolerance are ~2e-3 for the triple root and
        // ~1e-5 for the double roots; cluster means are an order better.
        for &(root, mult) in &factors {
            let near: Vec<_> = roots
                .iter()
                .filter(|z| (**z - Complex64::new(root, 0.0)).norm() < 1e-2)
                .collect();
            assert_eq!(near.len(), mult, "cluster size at {}", root);
            let mean = near.iter().fold(Complex64::new(0.0, 0.0), |acc, &&z| acc + z)
                / (near.len() as f64);
            assert!(
                (mean - Complex64::new(root, 0.0)).norm() < 1e-3,
                "cluster mean off at {}: {}",
                root,
                mean
            );
        }
    }

    #[test]
    fn deterministic_output() {
        let coeffs = [-6.0, 11.0, -6.0, 1.0];
        let a = numeric_roots(&coeffs, 1e-10).unwrap();
        let b = numeric_roots(&coeffs, 1e-10).unwrap();
        assert_eq!(a, b);
    }
}
