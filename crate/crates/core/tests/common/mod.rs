//! Test-only oracles, independent of the library's algorithms.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use vtgap::Multigraph;

/// Characteristic polynomial `det(λI − A)` of an integer matrix by the
/// Leverrier–Faddeev recurrence, coefficients in ascending degree.
pub fn char_poly(a: &[Vec<i128>]) -> Vec<i128> {
    let n = a.len();
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    let mut m = vec![vec![0i128; n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![0i128; n]; n];
        for i in 0..n {
            for j in 0..n {
                next[i][j] = (0..n).map(|l| a[i][l] * m[l][j]).sum();
            }
            next[i][i] += coeffs[n - k + 1];
        }
        m = next;
        let trace: i128 = (0..n).map(|i| (0..n).map(|l| a[i][l] * m[l][i]).sum::<i128>()).sum();
        assert_eq!(trace % k as i128, 0, "Faddeev trace must divide exactly");
        coeffs[n - k] = -trace / k as i128;
    }
    coeffs
}

pub fn poly_from_roots(roots: &[i128]) -> Vec<i128> {
    let mut p = vec![1i128];
    for &r in roots {
        let mut q = vec![0i128; p.len() + 1];
        for (i, &c) in p.iter().enumerate() {
            q[i + 1] += c;
            q[i] -= r * c;
        }
        p = q;
    }
    p
}

fn eval(p: &[i128], x: i128) -> i128 {
    p.iter().rev().fold(0, |acc, &c| acc * x + c)
}

/// Divides out every integer root in `lo..=hi`; returns the roots (with
/// multiplicity, descending) and the leftover quotient.
pub fn integer_roots(p: &[i128], lo: i128, hi: i128) -> (Vec<i128>, Vec<i128>) {
    let mut p = p.to_vec();
    let mut roots = Vec::new();
    for r in (lo..=hi).rev() {
        while p.len() > 1 && eval(&p, r) == 0 {
            // synthetic division by (λ − r)
            let deg = p.len() - 1;
            let mut q = vec![0i128; deg];
            let mut carry = 0;
            for i in (0..deg).rev() {
                carry = p[i + 1] + carry * r;
                q[i] = carry;
            }
            p = q;
            roots.push(r);
        }
    }
    (roots, p)
}

pub fn int_matrix(g: &Multigraph) -> Vec<Vec<i128>> {
    (0..g.n()).map(|u| g.row(u).iter().map(|&m| m as i128).collect()).collect()
}

/// Naive isoperimetric optimum over `1 ≤ |S| ≤ ⌊n/2⌋` with the least
/// sorted witness, recomputing every objective from scratch.
pub struct Brute {
    pub edge: (u64, u64, Vec<usize>),
    pub vertex: (u64, u64, Vec<usize>),
    /// min over all proper nonempty S of e(S, Sᶜ)/min(|S|, |Sᶜ|)
    pub edge_full_range: (u64, u64),
}

fn better(cand: (u64, u64, &Vec<usize>), best: &Option<(u64, u64, Vec<usize>)>) -> bool {
    match best {
        None => true,
        Some((n, d, w)) => {
            let l = cand.0 as u128 * *d as u128;
            let r = *n as u128 * cand.1 as u128;
            l < r || (l == r && cand.2 < w)
        }
    }
}

pub fn brute_expansion(g: &Multigraph) -> Brute {
    let n = g.n();
    let mut edge: Option<(u64, u64, Vec<usize>)> = None;
    let mut vertex: Option<(u64, u64, Vec<usize>)> = None;
    let mut full: Option<(u64, u64)> = None;
    for mask in 1u64..(1 << n) - 1 {
        let s: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let inside = |v: usize| mask >> v & 1 == 1;
        let mut cut = 0u64;
        for &u in &s {
            for v in 0..n {
                if !inside(v) {
                    cut += g.multiplicity(u, v) as u64;
                }
            }
        }
        let exterior = (0..n).filter(|&v| !inside(v) && s.iter().any(|&u| g.multiplicity(u, v) > 0)).count() as u64;
        let size = s.len() as u64;
        let small = size.min(n as u64 - size);
        if full.is_none_or(|(a, b)| (cut as u128) * (b as u128) < (a as u128) * (small as u128)) {
            full = Some((cut, small));
        }
        if size as usize > n / 2 {
            continue;
        }
        if better((cut, size, &s), &edge) {
            edge = Some((cut, size, s.clone()));
        }
        if better((exterior, size, &s), &vertex) {
            vertex = Some((exterior, size, s));
        }
    }
    Brute { edge: edge.unwrap(), vertex: vertex.unwrap(), edge_full_range: full.unwrap() }
}

/// Random `d`-regular multigraph: `⌊d/2⌋` permutation matrices added with
/// their transposes, plus a random involution when `d` is odd. Loops and
/// multi-edges arise naturally.
pub fn random_regular<R: Rng>(rng: &mut R, n: usize, d: usize) -> Multigraph {
    let mut adj = vec![vec![0u32; n]; n];
    for _ in 0..d / 2 {
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(rng);
        for v in 0..n {
            adj[v][p[v]] += 1;
            adj[p[v]][v] += 1;
        }
    }
    if d % 2 == 1 {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        let pairs = rng.gen_range(0..=n / 2);
        for k in 0..pairs {
            let (a, b) = (order[2 * k], order[2 * k + 1]);
            adj[a][b] += 1;
            adj[b][a] += 1;
        }
        for &v in &order[2 * pairs..] {
            adj[v][v] += 1;
        }
    }
    Multigraph::from_matrix(&adj).unwrap()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> vtgap::Permutation {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    vtgap::Permutation::from_images(p).unwrap()
}

#[test]
fn faddeev_on_triangle() {
    // K3: λ³ − 3λ − 2 = (λ − 2)(λ + 1)²
    let g = vtgap::graph::families::complete(3);
    let p = char_poly(&int_matrix(&g));
    assert_eq!(p, vec![-2, -3, 0, 1]);
    assert_eq!(integer_roots(&p, -2, 2).0, vec![2, -1, -1]);
}
