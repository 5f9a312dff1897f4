//! Acceptance suite. Each test covers one release criterion, asserts the
//! stated tolerances and runtime bound, and prints one PASS line (visible
//! with --nocapture).

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use tempfile::TempDir;

use canstrat_core::generators::{generate, Family};
use canstrat_core::{
    canonical_stratification, canonical_stratification_with, smith_normal_form, strata_poset,
    verify_with_oracle, Dispatch, IntMatrix, SimplicialComplex, Stratification, StratifyOptions,
};

/// The two CPU-heavy criteria take this lock so their runtime bounds are
/// measured without each other's load; timers start after acquisition.
static HEAVY: Mutex<()> = Mutex::new(());

fn canstrat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_canstrat"))
        .args(args)
        .output()
        .expect("binary should spawn")
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn report_without_timings(out: &Output) -> Value {
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let mut v: Value = serde_json::from_slice(&out.stdout).expect("valid json report");
    v.as_object_mut().unwrap().remove("timings");
    v
}

fn pass(n: usize, what: &str, elapsed: Duration) {
    println!("PASS criterion {n}: {what} ({:.2}s)", elapsed.as_secs_f64());
}

fn stratify(family: Family, level: usize) -> Stratification {
    let complex = generate(family, level).expect("level in range");
    canonical_stratification(complex, true)
}

/// Total member counts of the strata whose top dimension is `d`, sorted.
fn sizes_at_dim(report: &Value, d: usize) -> Vec<u64> {
    let mut sizes: Vec<u64> = report["strata"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|s| s["top_dim"] == d)
        .map(|s| s["counts"].as_array().unwrap().iter().map(|c| c.as_u64().unwrap()).sum())
        .collect();
    sizes.sort_unstable();
    sizes
}

#[test]
fn criterion_1_two_circles_golden() {
    let start = Instant::now();
    let path = fixture("two_circles.txt");
    let out = canstrat(&["run", path.to_str().unwrap(), "--poset"]);
    let report = report_without_timings(&out);

    assert_eq!(report["strata"].as_array().unwrap().len(), 4);
    assert_eq!(sizes_at_dim(&report, 2), [1, 16]);
    assert_eq!(sizes_at_dim(&report, 1), [6, 12]);
    assert_eq!(sizes_at_dim(&report, 0), Vec::<u64>::new());
    // both circles sit under the big sheet, the lone triangle under the
    // triangle circle only
    assert_eq!(report["poset"], serde_json::json!([[2, 0], [3, 0], [3, 1]]));

    let stored = std::fs::read_to_string(fixture("two_circles_expected.json")).unwrap();
    let mut stored: Value = serde_json::from_str(&stored).unwrap();
    stored.as_object_mut().unwrap().remove("timings");
    assert_eq!(report, stored, "report drifted from the committed expectation");

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:.2?}");
    pass(1, "two-circles golden run", elapsed);
}

#[test]
fn criterion_2_closed_manifolds_are_one_stratum() {
    let start = Instant::now();
    for k in 0..=5 {
        let s = stratify(Family::Sphere2, k);
        assert_eq!(s.strata().len(), 1, "sphere2({k})");
        assert_eq!(s.strata()[0].member_count(), s.complex().len(), "sphere2({k})");
    }
    for d in 2..=5 {
        let s = stratify(Family::SimplexBoundary, d);
        assert_eq!(s.strata().len(), 1, "simplex-boundary({d})");
        assert_eq!(s.strata()[0].member_count(), s.complex().len(), "simplex-boundary({d})");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:.2?}");
    pass(2, "closed manifolds give a single stratum", elapsed);
}

#[test]
fn criterion_3_ball_boundary_split() {
    let start = Instant::now();
    for k in 0..=3 {
        let s = stratify(Family::Ball3, k);
        assert_eq!(s.strata().len(), 2, "ball3({k})");
        let interior = s.strata().iter().find(|r| r.top_dim == 3).expect("interior stratum");
        let boundary = s.strata().iter().find(|r| r.top_dim == 2).expect("boundary stratum");
        let sphere_size = generate(Family::Sphere2, k).unwrap().len();
        assert_eq!(boundary.member_count(), sphere_size, "ball3({k}) boundary");
        assert_eq!(
            interior.member_count() + boundary.member_count(),
            s.complex().len(),
            "ball3({k}) totality"
        );
        assert_eq!(strata_poset(&s).relations(), vec![(boundary.id, interior.id)]);
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:.2?}");
    pass(3, "solid ball splits into interior and boundary", elapsed);
}

#[test]
fn criterion_4_pinched_sphere_strict_vs_loose() {
    let start = Instant::now();

    let complex = generate(Family::PinchedSphere, 0).unwrap();
    let pinch = complex.lookup(&[0]).expect("vertex 0 exists");
    let strict = canonical_stratification(complex.clone(), true);
    assert_eq!(strict.strata().len(), 2);
    let point = strict.stratum_of(pinch);
    assert_eq!(strict.strata()[point.0].top_dim, 0);
    assert_eq!(strict.strata()[point.0].member_count(), 1);

    let loose = canonical_stratification(complex, false);
    assert_eq!(loose.strata().len(), 1, "pinch point absorbed without the connectivity check");

    let dir = TempDir::new().unwrap();
    let input = dir.path().join("pinched.txt");
    let gen = canstrat(&["gen", "pinched-sphere", "-o", input.to_str().unwrap()]);
    assert_eq!(gen.status.code(), Some(0));
    let out = canstrat(&["run", input.to_str().unwrap(), "--no-strict", "--oracle"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("simplex (0)"), "stderr: {stderr}");

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:.2?}");
    pass(4, "pinch point kept strict, flagged by the oracle replay when loose", elapsed);
}

fn random_complex(rng: &mut ChaCha8Rng) -> SimplicialComplex {
    let n_maximal = rng.gen_range(1..=50);
    let tuples: Vec<Vec<u64>> = (0..n_maximal)
        .map(|_| {
            let arity = rng.gen_range(1..=5);
            let mut verts = BTreeSet::new();
            while verts.len() < arity {
                verts.insert(rng.gen_range(0..14u64));
            }
            verts.into_iter().collect()
        })
        .collect();
    SimplicialComplex::build(&tuples).expect("tuples are nonempty and nondegenerate")
}

#[test]
fn criterion_5_fast_paths_match_general_path_and_oracle() {
    let _guard = HEAVY.lock().unwrap_or_else(|e| e.into_inner());
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    let mut total_simplices = 0;
    for case in 0..200 {
        let complex = random_complex(&mut rng);
        total_simplices += complex.len();
        let fast = canonical_stratification_with(
            complex.clone(),
            StratifyOptions { strict: true, dispatch: Dispatch::Specialized },
        );
        let general = canonical_stratification_with(
            complex,
            StratifyOptions { strict: true, dispatch: Dispatch::GeneralOnly },
        );
        assert_eq!(fast.assignment(), general.assignment(), "case {case}");
        assert_eq!(fast.strata(), general.strata(), "case {case}");
        assert_eq!(fast.validate(), Ok(()), "case {case}");
        if let Err(divergence) = verify_with_oracle(&fast) {
            panic!("case {case}: {divergence}");
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(300), "took {elapsed:.2?}");
    let what =
        format!("200 fuzzed complexes ({} simplices mean) agree with the general path and oracle",
            total_simplices / 200);
    pass(5, &what, elapsed);
}

#[test]
fn criterion_6_deep_codimension_paths() {
    let start = Instant::now();

    let s = stratify(Family::SimplexBoundary, 5);
    assert_eq!(s.strata().len(), 1);
    assert_eq!(s.strata()[0].member_count(), 62);

    let s = stratify(Family::Cone, 5);
    assert_eq!(s.strata().len(), 2);
    let mut sizes: Vec<usize> = s.strata().iter().map(|r| r.member_count()).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, [62, 63], "base sphere below, coned interior above");

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:.2?}");
    pass(6, "codimension-4 and 5 membership paths", elapsed);
}

fn det_bareiss(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if k > n {
        return vec![];
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Divisor chain straight from the definition: the k-th determinantal
/// divisor is the gcd of all k-by-k minors, and consecutive quotients
/// give the diagonal.
fn divisors_by_minors(m: &[Vec<i128>]) -> (usize, Vec<i128>) {
    let (r, c) = (m.len(), m.first().map_or(0, Vec::len));
    let mut chain = Vec::new();
    for k in 1..=r.min(c) {
        let mut g = 0i128;
        for rows in combinations(r, k) {
            for cols in combinations(c, k) {
                let minor: Vec<Vec<i128>> =
                    rows.iter().map(|&i| cols.iter().map(|&j| m[i][j]).collect()).collect();
                g = gcd(g, det_bareiss(minor));
            }
        }
        if g == 0 {
            break;
        }
        chain.push(g);
    }
    let rank = chain.len();
    let mut divisors = Vec::with_capacity(rank);
    let mut prev = 1i128;
    for &g in &chain {
        divisors.push(g / prev);
        prev = g;
    }
    (rank, divisors)
}

fn rank_by_elimination(mut m: Vec<Vec<i128>>) -> usize {
    let (r, c) = (m.len(), m.first().map_or(0, Vec::len));
    let mut rank = 0;
    let mut prev = 1i128;
    for col in 0..c {
        let Some(pivot) = (rank..r).find(|&i| m[i][col] != 0) else { continue };
        m.swap(rank, pivot);
        for i in rank + 1..r {
            for j in col + 1..c {
                m[i][j] = (m[i][j] * m[rank][col] - m[i][col] * m[rank][j]) / prev;
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
        if rank == r {
            break;
        }
    }
    rank
}

#[test]
fn criterion_7_smith_normal_form_oracle() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0d1a_604a);
    for case in 0..500 {
        let r = rng.gen_range(1..=7);
        let c = rng.gen_range(1..=7);
        let rows: Vec<Vec<i64>> =
            (0..r).map(|_| (0..c).map(|_| rng.gen_range(-4..=4)).collect()).collect();
        let wide: Vec<Vec<i128>> =
            rows.iter().map(|row| row.iter().map(|&x| x as i128).collect()).collect();

        let snf = smith_normal_form(&IntMatrix::from_rows(&rows));
        let (rank, divisors) = divisors_by_minors(&wide);
        assert_eq!(snf.rank, rank, "case {case}: rank, matrix {rows:?}");
        assert_eq!(rank_by_elimination(wide), rank, "case {case}: oracle self-check");
        let got: Vec<String> = snf.divisors.iter().map(|d| d.to_string()).collect();
        let want: Vec<String> = divisors.iter().map(|d| d.to_string()).collect();
        assert_eq!(got, want, "case {case}: divisor chain, matrix {rows:?}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:.2?}");
    pass(7, "500 random matrices match the minors oracle", elapsed);
}

#[test]
fn criterion_8_stratification_scales_linearly() {
    let _guard = HEAVY.lock().unwrap_or_else(|e| e.into_inner());
    let start = Instant::now();
    let dir = TempDir::new().unwrap();
    for (family, levels, expected_rows) in [("sphere2", "2..6", 5), ("ball3", "1..4", 4)] {
        let json_path = dir.path().join(format!("{family}.json"));
        let out = canstrat(&[
            "bench",
            family,
            "--levels",
            levels,
            "--trials",
            "10",
            "-o",
            json_path.to_str().unwrap(),
        ]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "stderr: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let report: Value =
            serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
        assert_eq!(report["levels"].as_array().unwrap().len(), expected_rows);
        let fit = report["linear_fit"].as_f64().unwrap();
        assert!(fit <= 2.0, "{family}: time grew {fit:.3}x faster than size between levels");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(600), "took {elapsed:.2?}");
    pass(8, "bench ratios stay within 2x of linear", elapsed);
}

#[test]
fn criterion_9_structural_invariants_and_determinism() {
    let start = Instant::now();
    let complexes: Vec<(String, SimplicialComplex)> = [
        (Family::TwoCircles, 0),
        (Family::PinchedSphere, 0),
        (Family::PinchedAnnulus, 0),
        (Family::Disk2, 1),
        (Family::Ball3, 1),
        (Family::Sphere2, 2),
        (Family::Cone, 4),
        (Family::SimplexBoundary, 4),
    ]
    .into_iter()
    .map(|(f, k)| (format!("{f}({k})"), generate(f, k).unwrap()))
    .collect();
    for (name, complex) in complexes {
        let s = canonical_stratification(complex, true);
        assert_eq!(s.validate(), Ok(()), "{name}");
        if let Err(divergence) = verify_with_oracle(&s) {
            panic!("{name}: {divergence}");
        }
        let total: usize = s.strata().iter().map(|r| r.member_count()).sum();
        assert_eq!(total, s.complex().len(), "{name}: totality");
    }

    // shuffling input lines must not change the result
    let text = std::fs::read_to_string(fixture("two_circles.txt")).unwrap();
    let baseline = run_on_lines(text.lines().collect());
    let mut reversed: Vec<&str> = text.lines().collect();
    reversed.reverse();
    let mut rotated: Vec<&str> = text.lines().collect();
    rotated.rotate_left(4);
    for permuted in [reversed, rotated] {
        let other = run_on_lines(permuted);
        assert_eq!(baseline.assignment(), other.assignment());
        assert_eq!(baseline.strata(), other.strata());
    }

    let elapsed = start.elapsed();
    pass(9, "invariants hold and line order is irrelevant", elapsed);
}

fn run_on_lines(lines: Vec<&str>) -> Stratification {
    let text = lines.join("\n");
    let tuples = canstrat_core::parse_input(&text).unwrap();
    let complex = SimplicialComplex::build(&tuples).unwrap();
    canonical_stratification(complex, true)
}
