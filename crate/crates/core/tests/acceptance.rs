//! Acceptance suite: one PASS/FAIL line per criterion, written straight to
//! stderr so it shows up even when test output is captured.

mod common;

use std::f64::consts::PI;
use std::io::Write;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{char_poly, int_matrix, integer_roots, poly_from_roots, random_regular};
use vtgap::graph::families::*;
use vtgap::par::with_workers;
use vtgap::spectrum::normalized_spectrum;
use vtgap::symmetry::automorphism_group;
use vtgap::symmetry::cayley::{rotation, GroupSpec};
use vtgap::verifier::bounds::{ell_exact, gamma, rational_to_f64, BoundVariant};
use vtgap::verifier::corpus::{builtin_corpus, run_corpus, CorpusKind};
use vtgap::verifier::output::reports_to_csv;
use vtgap::{
    bvn_decompose, cheeger_sandwich_check, expansion_profile, fiber_census, quasi_auto_index, verify_cover,
    verify_spectral_bound, Exec, Multigraph, PermGroup, Rational, VerifyOptions,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

fn spectrum_exactness() -> Outcome {
    let start = Instant::now();
    let c5 = normalized_spectrum(&cycle(5), 2).map_err(|e| e.to_string())?;
    let pet = normalized_spectrum(&petersen(), 3).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();

    let (a, b) = ((2.0 * PI / 5.0).cos(), (4.0 * PI / 5.0).cos());
    ensure(close(&c5.eigenvalues, &[1.0, a, a, b, b], 1e-9), || format!("C5 spectrum {:?}", c5.eigenvalues))?;

    let poly = char_poly(&int_matrix(&petersen()));
    let mut roots = vec![3];
    roots.extend([1; 5]);
    roots.extend([-2; 4]);
    ensure(poly == poly_from_roots(&roots), || "Petersen characteristic polynomial mismatch".into())?;
    let (found, rest) = integer_roots(&poly, -3, 3);
    ensure(rest == vec![1], || "Petersen polynomial does not split".into())?;
    let exact: Vec<f64> = found.iter().map(|&r| r as f64 / 3.0).collect();
    ensure(close(&pet.eigenvalues, &exact, 1e-9), || format!("Petersen spectrum {:?}", pet.eigenvalues))?;
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("C5 and Petersen within 1e-9 in {elapsed:?}"))
}

fn transitive_entries() -> Vec<(String, Multigraph)> {
    builtin_corpus().into_iter().filter(|e| e.kind == CorpusKind::Transitive).map(|e| (e.id, e.graph)).collect()
}

fn corpus_verdict() -> Outcome {
    let corpus = transitive_entries();
    let opts = VerifyOptions { exec: Exec::Sequential, ..Default::default() };
    let start = Instant::now();
    let reports = with_workers(1, || run_corpus(&corpus, &opts));
    let elapsed = start.elapsed();
    for (report, (id, _)) in reports.iter().zip(&corpus) {
        let r = report.as_ref().map_err(|e| format!("{id}: {e}"))?;
        ensure(r.complete && r.applicable, || format!("{id}: complete={} applicable={}", r.complete, r.applicable))?;
        ensure(r.vertex_transitive == Some(true) && r.connected && !r.bipartite && r.n >= 4, || format!("{id}: outside hypotheses"))?;
        let verdict = (r.pass_lower, r.pass_lower_edge_variant, r.pass_upper);
        ensure(verdict == (Some(true), Some(true), Some(true)), || format!("{id}: verdict {verdict:?}"))?;
    }
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("{} graphs pass both lower variants and the upper bound in {elapsed:?}", corpus.len()))
}

fn bipartite_controls() -> Outcome {
    for (id, g) in [("C4", cycle(4)), ("C6", cycle(6)), ("K3,3", complete_bipartite(3, 3))] {
        let r = verify_spectral_bound(id, &g, &VerifyOptions::default()).map_err(|e| e.to_string())?;
        ensure((r.lambda_min + 1.0).abs() <= 1e-9, || format!("{id}: lambda_min {}", r.lambda_min))?;
        ensure(!r.applicable, || format!("{id}: marked applicable"))?;
    }
    Ok("C4, C6, K3,3 have lambda_min = -1 and are not applicable".into())
}

fn cheeger_sandwich() -> Outcome {
    let mut checked = 0;
    for e in builtin_corpus() {
        let d = e.graph.validate_regular().map_err(|err| err.to_string())?;
        if !e.graph.is_connected() {
            continue;
        }
        let p = expansion_profile(&e.graph, Default::default()).map_err(|err| format!("{}: {err}", e.id))?;
        let s = normalized_spectrum(&e.graph, d).map_err(|err| err.to_string())?;
        let c = cheeger_sandwich_check(&p, &s, d);
        ensure(c.holds, || format!("{}: {}", e.id, c.diagnostic().unwrap_or_default()))?;
        checked += 1;
    }
    // (1 - λ₂)/2 is 2/3 for K4 (λ₂ = -1/3) and 1/3 for Petersen (λ₂ = 1/3)
    for (id, g, d, half_gap) in [("K4", complete(4), 3u64, Rational::new(2, 3)), ("Petersen", petersen(), 3, Rational::new(1, 3))] {
        let p = expansion_profile(&g, Default::default()).map_err(|e| e.to_string())?;
        let s = normalized_spectrum(&g, d).map_err(|e| e.to_string())?;
        let expected_lambda2 = 1.0 - 2.0 * *half_gap.numer() as f64 / *half_gap.denom() as f64;
        ensure((s.lambda2 - expected_lambda2).abs() <= 1e-9, || format!("{id}: lambda2 {}", s.lambda2))?;
        let ratio = p.h_edge / Rational::from(d);
        ensure(ratio == half_gap, || format!("{id}: h_edge/d = {ratio}, expected {half_gap}"))?;
    }
    Ok(format!("{checked} connected corpus graphs; K4 and Petersen attain equality"))
}

fn cover_exactness() -> Outcome {
    for e in builtin_corpus() {
        let d = e.graph.validate_regular().map_err(|err| err.to_string())?;
        let cover = bvn_decompose(&e.graph, d).map_err(|err| format!("{}: {err}", e.id))?;
        verify_cover(&e.graph, &cover).map_err(|v| format!("{}: {v}", e.id))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(200);
    let (mut loops, mut multi) = (0, 0);
    for k in 0..200 {
        let n = rng.gen_range(1..=12);
        let d = rng.gen_range(1..=6);
        let g = random_regular(&mut rng, n, d);
        loops += usize::from(g.loop_units() > 0);
        multi += usize::from(g.edges().iter().any(|&(u, v, m)| u != v && m > 1));
        let cover = bvn_decompose(&g, d as u64).map_err(|err| format!("random #{k}: {err}"))?;
        verify_cover(&g, &cover).map_err(|v| format!("random #{k}: {v}"))?;
    }
    ensure(loops > 0 && multi > 0, || "random sample lacks loops or multi-edges".into())?;
    Ok(format!("corpus plus 200 random multigraphs ({loops} with loops, {multi} with multi-edges)"))
}

fn index_totality() -> Outcome {
    let mut scanned = 0usize;
    for (id, g) in [("C5", cycle(5)), ("C7", cycle(7)), ("K4", complete(4)), ("Petersen", petersen())] {
        let d = g.validate_regular().map_err(|e| e.to_string())?;
        let cover = bvn_decompose(&g, d).map_err(|e| e.to_string())?;
        let aut = automorphism_group(&g).map_err(|e| e.to_string())?;
        for a in aut.elements() {
            for v in 0..g.n() {
                for j in 0..d as usize {
                    quasi_auto_index(&g, &cover, a, v, j).map_err(|e| format!("{id}: {e}"))?;
                    scanned += 1;
                }
            }
        }
        for v in 0..g.n() {
            for j in 0..d as usize {
                let c = fiber_census(&g, &cover, aut.elements(), v, j).map_err(|e| e.to_string())?;
                let max = c.counts.iter().copied().max().unwrap_or(0);
                ensure(max >= aut.order().div_ceil(d as usize), || format!("{id}: census {:?} at ({v}, {j})", c.counts))?;
            }
        }
    }
    Ok(format!("{scanned} (automorphism, v, j) triples defined; every census meets the pigeonhole bound"))
}

fn group_facts() -> Outcome {
    let c5 = automorphism_group(&cycle(5)).map_err(|e| e.to_string())?;
    ensure(c5.order() == 10, || format!("|Aut(C5)| = {}", c5.order()))?;
    ensure(c5.transitivity_order() == Ok(2), || "t(C5) != 2".into())?;
    let p = automorphism_group(&petersen()).map_err(|e| e.to_string())?;
    ensure(p.order() == 120, || format!("|Aut(Petersen)| = {}", p.order()))?;
    ensure(p.transitivity_order() == Ok(12), || "t(Petersen) != 12".into())?;

    let d5 = GroupSpec::Dihedral(5).build().map_err(|e| e.to_string())?;
    let rotations = PermGroup::generate(5, &[rotation(5, 1)], 10).map_err(|e| e.to_string())?;
    let subs = d5.index_two_subgroups().map_err(|e| e.to_string())?;
    ensure(subs.len() == 1 && subs[0].elements() == rotations.elements(), || "D5 index-2 subgroups".into())?;

    let c9 = automorphism_group(&cycle(9)).map_err(|e| e.to_string())?;
    let h = c9.descend_to_condition1().map_err(|e| e.to_string())?;
    let rot9 = PermGroup::generate(9, &[rotation(9, 1)], 18).map_err(|e| e.to_string())?;
    ensure(h.elements() == rot9.elements(), || format!("descent gave order {}", h.order()))?;
    ensure(h.condition1_holds() == Ok(true), || "condition (1) fails on C9 rotations".into())?;
    Ok("Aut(C5)=10,t=2; Aut(Petersen)=120,t=12; D5 -> rotations; Aut(C9) -> C9".into())
}

fn formulas() -> Outcome {
    let one = BigRational::from_integer(BigInt::from(1));
    let vt = ell_exact(&one, 2, BoundVariant::VertexTransitive).map_err(|e| e.to_string())?;
    let qa = ell_exact(&one, 2, BoundVariant::QuasiAutomorphic).map_err(|e| e.to_string())?;
    ensure(vt == BigRational::new(1.into(), 524288.into()), || format!("ell VT = {vt}"))?;
    ensure(qa == BigRational::new(1.into(), 1048576.into()), || format!("ell QA = {qa}"))?;
    ensure(rational_to_f64(&vt) == 1.0 / 524288.0, || "ell VT as float".into())?;
    let g = gamma(1.0, 2).map_err(|e| e.to_string())?;
    ensure((g - 4.0 * 2f64.sqrt()).abs() <= 1e-12, || format!("gamma(1, 2) = {g}"))?;
    Ok("ell = 1/524288 and 1/1048576 exactly; gamma(1, 2) = 4*sqrt(2)".into())
}

fn determinism() -> Outcome {
    let corpus: Vec<(String, Multigraph)> = builtin_corpus().into_iter().map(|e| (e.id, e.graph)).collect();
    let render = |workers: usize| {
        with_workers(workers, || {
            let reports: Result<Vec<_>, _> = run_corpus(&corpus, &VerifyOptions::default()).into_iter().collect();
            reports.map(|r| reports_to_csv(&r)).map_err(|e| e.to_string())
        })
    };
    let one = render(1)?;
    let again = render(1)?;
    let four = render(4)?;
    ensure(one == again, || "repeated runs differ".into())?;
    ensure(one == four, || "1 vs 4 workers differ".into())?;
    Ok(format!("{} bytes of CSV identical across runs and worker counts", one.len()))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("spectrum exactness", spectrum_exactness),
        ("corpus verdict", corpus_verdict),
        ("bipartite controls", bipartite_controls),
        ("cheeger sandwich", cheeger_sandwich),
        ("cover exactness", cover_exactness),
        ("index totality and fiber pigeonhole", index_totality),
        ("group facts", group_facts),
        ("formula spot checks", formulas),
        ("determinism", determinism),
    ];
    let mut failed = Vec::new();
    let mut log = std::io::stderr().lock();
    for (k, (name, run)) in criteria.iter().enumerate() {
        let line = match run() {
            Ok(detail) => format!("PASS {}. {name}: {detail}", k + 1),
            Err(why) => {
                failed.push(k + 1);
                format!("FAIL {}. {name}: {why}", k + 1)
            }
        };
        writeln!(log, "{line}").expect("stderr");
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
