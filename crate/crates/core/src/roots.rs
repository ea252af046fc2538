//! Polynomial roots via the eigenvalues of a balanced companion matrix.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::UniPoly;

const MAX_QR_ITERATIONS: usize = 60;
const POLISH_STEPS: usize = 8;
/// Relative coefficient accuracy assumed when deciding whether a tight
/// cluster of complex roots is a perturbed multiple real root.
const CLUSTER_EPS: f64 = 1e-10;

/// All complex roots of `c[0] + c[1] t + ... + c[d] t^d` (`c[d] ≠ 0`),
/// polished by Newton steps on the original coefficients.
pub fn complex_roots(coeffs: &[f64]) -> Result<Vec<Complex64>> {
    let coeffs = trim(coeffs);
    if coeffs.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let zeros = coeffs.iter().take_while(|c| **c == 0.0).count();
    let reduced = &coeffs[zeros..];
    let d = reduced.len() - 1;
    let mut roots = vec![Complex64::new(0.0, 0.0); zeros];
    match d {
        0 => {}
        1 => roots.push(Complex64::new(-reduced[0] / reduced[1], 0.0)),
        _ => {
            let mut a = companion(reduced);
            balance(&mut a, d);
            let eig = hqr(&mut a, d)?;
            roots.extend(eig.into_iter().map(|z| polish(reduced, z)));
        }
    }
    Ok(roots)
}

/// Real roots in ascending order (with multiplicity), or `NotRealRooted`
/// when some root has `|Im z| > tol_imag (1 + |z|)` and cannot be explained
/// as a split multiple real root.
pub fn real_roots(q: &UniPoly<f64>, tol_imag: f64) -> Result<Vec<f64>> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let roots = complex_roots(q.coeffs())?;
    let suspicious = |z: &Complex64| z.im.abs() > tol_imag * (1.0 + z.norm());
    if !roots.iter().any(suspicious) {
        return Ok(sorted(roots.iter().map(|z| z.re).collect()));
    }
    let mut used = vec![false; roots.len()];
    let mut out = Vec::with_capacity(roots.len());
    for i in 0..roots.len() {
        if used[i] || !suspicious(&roots[i]) {
            continue;
        }
        let (members, centre) = cluster(&roots, &used, i).ok_or(Error::NotRealRooted)?;
        for &j in &members {
            used[j] = true;
            out.push(centre);
        }
    }
    for (z, u) in roots.iter().zip(&used) {
        if !u {
            out.push(z.re);
        }
    }
    Ok(sorted(out))
}

/// The unused roots near `roots[seed]` that plausibly come from one real root
/// of multiplicity `m`, which splits by about `eps^(1/m)` under relative
/// coefficient error `eps`. Returns the members and their real centroid.
fn cluster(roots: &[Complex64], used: &[bool], seed: usize) -> Option<(Vec<usize>, f64)> {
    let mut centre = roots[seed].re;
    let mut m = 2;
    loop {
        let reach = 2.0 * CLUSTER_EPS.powf(1.0 / m as f64) * (1.0 + centre.abs());
        let members: Vec<usize> = (0..roots.len())
            .filter(|&j| !used[j] && (roots[j] - centre).norm() <= reach)
            .collect();
        if members.len() < 2 || !members.contains(&seed) {
            return None;
        }
        centre = members.iter().map(|&j| roots[j].re).sum::<f64>() / members.len() as f64;
        if members.len() <= m {
            let inside = members.iter().all(|&j| (roots[j] - centre).norm() <= reach);
            return inside.then_some((members, centre));
        }
        m = members.len();
    }
}

fn sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(f64::total_cmp);
    v
}

fn trim(coeffs: &[f64]) -> &[f64] {
    let end = coeffs.iter().rposition(|c| *c != 0.0).map_or(0, |i| i + 1);
    &coeffs[..end]
}

fn horner(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

fn polish(coeffs: &[f64], mut z: Complex64) -> Complex64 {
    let real = z.im == 0.0;
    let (mut val, mut der) = horner(coeffs, z);
    for _ in 0..POLISH_STEPS {
        if val.norm() == 0.0 || der.norm() == 0.0 {
            break;
        }
        let mut next = z - val / der;
        if real {
            next.im = 0.0;
        }
        let (nv, nd) = horner(coeffs, next);
        if !(nv.norm() < val.norm()) {
            break;
        }
        z = next;
        val = nv;
        der = nd;
    }
    z
}

/// Upper Hessenberg companion matrix, stored 1-based in an `(d+1)²` buffer.
fn companion(c: &[f64]) -> Vec<Vec<f64>> {
    let d = c.len() - 1;
    let mut a = vec![vec![0.0; d + 1]; d + 1];
    for k in 1..=d {
        a[1][k] = -c[d - k] / c[d];
    }
    for j in 2..=d {
        a[j][j - 1] = 1.0;
    }
    a
}

fn balance(a: &mut [Vec<f64>], n: usize) {
    const RADIX: f64 = 2.0;
    let sqrdx = RADIX * RADIX;
    let mut done = false;
    while !done {
        done = true;
        for i in 1..=n {
            let mut r = 0.0;
            let mut c = 0.0;
            for j in 1..=n {
                if j != i {
                    c += a[j][i].abs();
                    r += a[i][j].abs();
                }
            }
            if c != 0.0 && r != 0.0 {
                let s = c + r;
                let mut f = 1.0;
                let mut g = r / RADIX;
                while c < g {
                    f *= RADIX;
                    c *= sqrdx;
                }
                g = r * RADIX;
                while c > g {
                    f /= RADIX;
                    c /= sqrdx;
                }
                if (c + r) / f < 0.95 * s {
                    done = false;
                    let g = 1.0 / f;
                    for j in 1..=n {
                        a[i][j] *= g;
                    }
                    for j in 1..=n {
                        a[j][i] *= f;
                    }
                }
            }
        }
    }
}

/// Eigenvalues of a 1-based upper Hessenberg matrix by the shifted QR
/// algorithm with implicit double shifts. Destroys `a`.
#[allow(clippy::many_single_char_names)]
fn hqr(a: &mut [Vec<f64>], n: usize) -> Result<Vec<Complex64>> {
    let mut wr = vec![0.0; n + 1];
    let mut wi = vec![0.0; n + 1];
    let mut anorm = 0.0;
    for i in 1..=n {
        for j in (i.max(2) - 1)..=n {
            anorm += a[i][j].abs();
        }
    }
    let mut nn = n;
    let mut t = 0.0;
    let (mut p, mut q, mut r, mut s, mut w, mut x, mut y, mut z);
    while nn >= 1 {
        let mut its = 0;
        loop {
            let mut l = nn;
            while l >= 2 {
                s = a[l - 1][l - 1].abs() + a[l][l].abs();
                if s == 0.0 {
                    s = anorm;
                }
                if a[l][l - 1].abs() + s == s {
                    a[l][l - 1] = 0.0;
                    break;
                }
                l -= 1;
            }
            x = a[nn][nn];
            if l == nn {
                wr[nn] = x + t;
                wi[nn] = 0.0;
                nn -= 1;
                break;
            }
            y = a[nn - 1][nn - 1];
            w = a[nn][nn - 1] * a[nn - 1][nn];
            if l == nn - 1 {
                p = 0.5 * (y - x);
                q = p * p + w;
                z = q.abs().sqrt();
                x += t;
                if q >= 0.0 {
                    z = p + z.copysign(p);
                    wr[nn - 1] = x + z;
                    wr[nn] = x + z;
                    if z != 0.0 {
                        wr[nn] = x - w / z;
                    }
                    wi[nn - 1] = 0.0;
                    wi[nn] = 0.0;
                } else {
                    wr[nn - 1] = x + p;
                    wr[nn] = x + p;
                    wi[nn - 1] = -z;
                    wi[nn] = z;
                }
                nn = nn.saturating_sub(2);
                break;
            }
            if its == MAX_QR_ITERATIONS {
                return Err(Error::NoConvergence(MAX_QR_ITERATIONS));
            }
            if its > 0 && its % 10 == 0 {
                t += x;
                for i in 1..=nn {
                    a[i][i] -= x;
                }
                s = a[nn][nn - 1].abs() + a[nn - 1][nn - 2].abs();
                x = 0.75 * s;
                y = x;
                w = -0.4375 * s * s;
            }
            its += 1;
            let mut m = nn - 2;
            loop {
                z = a[m][m];
                r = x - z;
                s = y - z;
                p = (r * s - w) / a[m + 1][m] + a[m][m + 1];
                q = a[m + 1][m + 1] - z - r - s;
                r = a[m + 2][m + 1];
                s = p.abs() + q.abs() + r.abs();
                p /= s;
                q /= s;
                r /= s;
                if m == l {
                    break;
                }
                let u = a[m][m - 1].abs() * (q.abs() + r.abs());
                let v = p.abs() * (a[m - 1][m - 1].abs() + z.abs() + a[m + 1][m + 1].abs());
                if u + v == v {
                    break;
                }
                m -= 1;
            }
            for i in m + 2..=nn {
                a[i][i - 2] = 0.0;
                if i != m + 2 {
                    a[i][i - 3] = 0.0;
                }
            }
            let mut k = m;
            while k < nn {
                if k != m {
                    p = a[k][k - 1];
                    q = a[k + 1][k - 1];
                    r = if k != nn - 1 { a[k + 2][k - 1] } else { 0.0 };
                    x = p.abs() + q.abs() + r.abs();
                    if x != 0.0 {
                        p /= x;
                        q /= x;
                        r /= x;
                    }
                }
                s = (p * p + q * q + r * r).sqrt().copysign(p);
                if s != 0.0 {
                    if k == m {
                        if l != m {
                            a[k][k - 1] = -a[k][k - 1];
                        }
                    } else {
                        a[k][k - 1] = -s * x;
                    }
                    p += s;
                    x = p / s;
                    y = q / s;
                    z = r / s;
                    q /= p;
                    r /= p;
                    for j in k..=nn {
                        p = a[k][j] + q * a[k + 1][j];
                        if k != nn - 1 {
                            p += r * a[k + 2][j];
                            a[k + 2][j] -= p * z;
                        }
                        a[k + 1][j] -= p * y;
                        a[k][j] -= p * x;
                    }
                    let mmin = nn.min(k + 3);
                    for i in l..=mmin {
                        p = x * a[i][k] + y * a[i][k + 1];
                        if k != nn - 1 {
                            p += z * a[i][k + 2];
                            a[i][k + 2] -= p * r;
                        }
                        a[i][k + 1] -= p * q;
                        a[i][k] -= p;
                    }
                }
                k += 1;
            }
        }
    }
    Ok((1..=n).map(|i| Complex64::new(wr[i], wi[i])).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[f64]) -> UniPoly<f64> {
        UniPoly::new(c.to_vec())
    }

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn quadratic_examples() {
        assert!(close(&real_roots(&q(&[3.0, -4.0, 1.0]), 1e-7).unwrap(), &[1.0, 3.0], 1e-14));
        assert_eq!(real_roots(&q(&[1.0, 0.0, 1.0]), 1e-7), Err(Error::NotRealRooted));
        let s = 1.0 / 3f64.sqrt();
        let r = real_roots(&q(&[11.0, -12.0, 3.0]), 1e-7).unwrap();
        assert!(close(&r, &[2.0 - s, 2.0 + s], 1e-14));
    }

    #[test]
    fn zero_and_constant() {
        assert_eq!(real_roots(&q(&[]), 1e-7), Err(Error::ZeroPolynomial));
        assert_eq!(real_roots(&q(&[2.0]), 1e-7).unwrap(), Vec::<f64>::new());
        assert_eq!(real_roots(&q(&[0.0, 0.0, 5.0]), 1e-7).unwrap(), vec![0.0, 0.0]);
    }

    #[test]
    fn multiple_roots_are_recovered() {
        let p = UniPoly::from_roots(&[2.0, 2.0, 2.0, -1.0, 0.5, 0.5]);
        let r = real_roots(&p, 1e-7).unwrap();
        assert!(close(&r, &[-1.0, 0.5, 0.5, 2.0, 2.0, 2.0], 1e-4), "{r:?}");
        let p = UniPoly::from_roots(&[1.0; 4]);
        let r = real_roots(&p, 1e-7).unwrap();
        assert!(close(&r, &[1.0; 4], 1e-3), "{r:?}");
    }

    #[test]
    fn well_separated_roots_are_accurate() {
        let expect: Vec<f64> = (1..=12).map(|i| i as f64 * 0.75 - 3.0).collect();
        let r = real_roots(&UniPoly::from_roots(&expect), 1e-7).unwrap();
        assert!(close(&r, &expect, 1e-6), "{r:?}");
    }

    #[test]
    fn complex_pair_with_real_roots() {
        // (t^2 + 2t + 5)(t - 3)
        let p = q(&[5.0, 2.0, 1.0]).mul(&q(&[-3.0, 1.0]));
        let z = complex_roots(p.coeffs()).unwrap();
        assert_eq!(z.len(), 3);
        assert!(z.iter().any(|z| (z - Complex64::new(-1.0, 2.0)).norm() < 1e-12));
        assert!(z.iter().any(|z| (z - Complex64::new(3.0, 0.0)).norm() < 1e-12));
        assert_eq!(real_roots(&p, 1e-7), Err(Error::NotRealRooted));
    }
}
