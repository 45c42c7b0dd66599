//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Runs as `cargo test -p ks-coset --test acceptance`.

use std::f64::consts::PI;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::Instant;

use ks_coset_core::affine::enumerate_su;
use ks_coset_core::coset::{selection_check, u1_coset_b_vacuum, u1_coset_vps, weight_gap};
use ks_coset_core::modular::{qdim, s_spin, s_su, s_u1};
use ks_coset_core::{check_duality, Coset, CosetField, CosetSpec, RationalWeight, DEFAULT_BUDGET};
use num_integer::{binomial, gcd};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn spec(m: u32, n: u32, k: u32) -> CosetSpec {
    CosetSpec::new(m, n, k).expect("positive parameters")
}

/// Weyl-formula quantum dimension as a product of sines over positive roots.
fn qdim_sines(rank: usize, level: u32, labels: &[u32]) -> f64 {
    let ell: Vec<i64> = (0..rank)
        .map(|i| i64::from(labels.iter().skip(i).sum::<u32>()) + (rank - 1 - i) as i64)
        .collect();
    let h = f64::from(rank as u32 + level);
    let mut d = 1.0;
    for i in 0..rank {
        for j in i + 1..rank {
            d *= (PI * (ell[i] - ell[j]) as f64 / h).sin() / (PI * (j - i) as f64 / h).sin();
        }
    }
    d
}

fn c1_central_charge() -> Outcome {
    let mut checked = 0;
    for m in 1..=4u32 {
        for n in 1..=4u32 {
            for k in 1..=4u32 {
                let c = spec(m, n, k).central_charge();
                let want = RationalWeight::new(i64::from(3 * m * n * k), i64::from(m + n + k));
                ensure(c == want, || format!("G({m},{n},{k}): {c} != {want}"))?;
                for (a, b, d) in [(m, k, n), (n, m, k), (n, k, m), (k, m, n), (k, n, m)] {
                    let p = spec(a, b, d).central_charge();
                    ensure(p == c, || {
                        format!("G({a},{b},{d}) gives {p}, G({m},{n},{k}) gives {c}")
                    })?;
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} specs, all six permutations"))
}

fn c2_enumeration() -> Outcome {
    for rank in 1..=6usize {
        for level in 1..=6u32 {
            let got = enumerate_su(rank, level).len() as u64;
            let want = binomial(rank as u64 + u64::from(level) - 1, rank as u64 - 1);
            ensure(got == want, || {
                format!("su({rank})_{level}: {got} != {want}")
            })?;
        }
    }
    Ok("N, k <= 6".into())
}

fn c3_modular() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut worst_qdim: f64 = 0.0;
    let mut count = 0;
    let mut check = |name: String, s: &ks_coset_core::SMatrix| -> Result<(), String> {
        let r = s.unitarity_residual().max(s.symmetry_residual());
        worst = worst.max(r);
        count += 1;
        ensure(r <= 1e-9, || format!("{name}: residual {r:e}"))
    };
    for rank in 1..=9usize {
        for level in 1..=(10 - rank as u32) {
            let s = s_su(rank, level);
            check(format!("su({rank})_{level}"), &s)?;
            for (index, w) in enumerate_su(rank, level).iter().enumerate() {
                let d = qdim(&s, index).map_err(|e| e.to_string())?;
                let oracle = qdim_sines(rank, level, w.labels());
                let err = (d - oracle).abs();
                worst_qdim = worst_qdim.max(err);
                ensure(err <= 1e-8, || format!("qdim {w}: {d} vs {oracle}"))?;
            }
        }
    }
    for modulus in 1..=64u64 {
        check(format!("u1({modulus})"), &s_u1(modulus))?;
    }
    for half_dim in 1..=8u32 {
        check(format!("spin({})_1", 2 * half_dim), &s_spin(half_dim))?;
    }
    Ok(format!(
        "{count} matrices, max residual {worst:.1e}, max qdim error {worst_qdim:.1e}"
    ))
}

fn c4_u1_closed_form() -> Outcome {
    let mut worst: f64 = 0.0;
    for a in 1..=20u64 {
        for b in 1..=20u64 {
            let g = gcd(a, b);
            let vps = u1_coset_vps(a, b).map_err(|e| e.to_string())?;
            ensure(vps.len() as u64 == 2 * g, || {
                format!("({a},{b}): {} VPs, want {}", vps.len(), 2 * g)
            })?;
            let summed = u1_coset_b_vacuum(a, b).map_err(|e| e.to_string())?;
            let closed = g as f64 / ((2 * a * b * (a + b)) as f64).sqrt();
            let err = (summed - closed).abs();
            worst = worst.max(err);
            ensure(err <= 1e-9, || format!("({a},{b}): {summed} vs {closed}"))?;
        }
    }
    Ok(format!("1 <= a, b <= 20, max error {worst:.1e}"))
}

fn c5_vp_consistency() -> Outcome {
    let mut elements = 0;
    for m in 1..=3 {
        for n in 1..=3 {
            for k in 1..=3 {
                let s = spec(m, n, k);
                let coset = Coset::new(s).map_err(|e| e.to_string())?;
                for w in coset.vp_group().elements() {
                    let ok = selection_check(&w.image, &s).map_err(|e| e.to_string())?;
                    ensure(ok, || format!("{s}: {} violates selection rules", w.image))?;
                    let gap = weight_gap(&w.image);
                    ensure(gap.is_integer() && gap >= RationalWeight::ZERO, || {
                        format!("{s}: {} has weight gap {gap}", w.image)
                    })?;
                    elements += 1;
                }
            }
        }
    }
    Ok(format!("27 specs, {elements} elements"))
}

const CROSS_CHECK: [(u32, u32, u32); 4] = [(1, 1, 1), (1, 1, 2), (2, 1, 1), (2, 2, 1)];

fn c6_b_factorization() -> Outcome {
    let mut fields = 0;
    let mut worst: f64 = 0.0;
    for (m, n, k) in CROSS_CHECK {
        let s = spec(m, n, k);
        let coset = Coset::new(s).map_err(|e| e.to_string())?;
        let b_vac = coset
            .b_coeff(&CosetField::vacuum(&s))
            .map_err(|e| e.to_string())?;
        for f in coset
            .enumerate_exp(DEFAULT_BUDGET)
            .map_err(|e| e.to_string())?
        {
            let d = qdim_sines(f.lambda0.rank(), f.lambda0.level(), f.lambda0.labels())
                * qdim_sines(f.lam1.rank(), f.lam1.level(), f.lam1.labels())
                * qdim_sines(f.lam2.rank(), f.lam2.level(), f.lam2.labels());
            let direct = coset.b_coeff(&f).map_err(|e| e.to_string())?;
            let err = (direct - d * b_vac).abs();
            worst = worst.max(err);
            ensure(err <= 1e-8, || {
                format!("{s} {f}: b = {direct}, expected {}", d * b_vac)
            })?;
            let stat = coset.stat_dim(&f).map_err(|e| e.to_string())?;
            ensure((stat - d).abs() <= 1e-8, || {
                format!("{s} {f}: stat_dim {stat} vs {d}")
            })?;
            fields += 1;
        }
    }
    Ok(format!("{fields} fields, max error {worst:.1e}"))
}

fn c7_fixed_points() -> Outcome {
    let golden_path = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../core/tests/golden/counts.json"
    );
    let golden: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(golden_path).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
    let mut summary = Vec::new();
    for (m, n, k) in CROSS_CHECK {
        let s = spec(m, n, k);
        let r = Coset::new(s)
            .and_then(|c| c.resolve_spectrum(DEFAULT_BUDGET))
            .map_err(|e| e.to_string())?;
        let mut total = 0;
        for row in &r.rows {
            let t = row.stabilizer_order;
            ensure(((m + n) as usize).is_multiple_of(t), || {
                format!("{s}: t = {t} does not divide m+n")
            })?;
            ensure(row.orbit_size * t == r.vp_order, || {
                format!("{s}: orbit {} x t {t} != {}", row.orbit_size, r.vp_order)
            })?;
            total += t;
        }
        ensure(total == r.irrep_count, || {
            format!("{s}: sum t = {total} != {}", r.irrep_count)
        })?;
        let entry = golden["specs"]
            .as_array()
            .and_then(|a| a.iter().find(|e| e["m"] == m && e["n"] == n && e["k"] == k))
            .ok_or_else(|| format!("{s}: no golden entry"))?;
        ensure(
            entry["irrep_count"] == r.irrep_count && entry["vp_order"] == r.vp_order,
            || {
                format!(
                    "{s}: irreps {} / VPs {} differ from golden {entry}",
                    r.irrep_count, r.vp_order
                )
            },
        )?;
        summary.push(format!("{s}:{}", r.irrep_count));
    }
    Ok(format!(
        "irrep counts {} match the frozen golden values",
        summary.join(" ")
    ))
}

fn c8_duality() -> Outcome {
    let mut summary = Vec::new();
    for (m, n, k) in [(2, 1, 1), (3, 1, 1), (2, 2, 1), (3, 2, 1)] {
        let s = spec(m, n, k);
        let report = check_duality(s, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        ensure(report.passed(), || {
            format!(
                "{s} vs {}: c {} irreps {} rows {} {:?}",
                s.level_rank_dual(),
                report.central_charge_equal,
                report.irrep_count_equal,
                report.rows_equal,
                report.row_mismatches
            )
        })?;
        summary.push(format!("{s}<->{}", s.level_rank_dual()));
    }
    Ok(summary.join(" "))
}

fn c9_minimal_models() -> Outcome {
    for k in 1..=6 {
        let order = Coset::new(spec(1, 1, k))
            .map_err(|e| e.to_string())?
            .vp_group()
            .order();
        ensure(order == 2, || format!("G(1,1,{k}): order {order}"))?;
    }
    Ok("G(1,1,k), k <= 6: order 2".into())
}

fn cli(cache: &Path, args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_ks-coset"))
        .args(args)
        .env("KS_COSET_CACHE_DIR", cache)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        format!("{args:?}: {}", String::from_utf8_lossy(&out.stderr))
    })?;
    Ok(out.stdout)
}

fn c10_determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let commands: [&[&str]; 6] = [
        &["spectrum", "2", "2", "1"],
        &["vps", "2", "2", "1"],
        &["vps", "2", "2", "1", "--verify"],
        &["duality", "2", "1", "1"],
        &["modular", "2", "1", "1"],
        &["u1-coset", "4", "6"],
    ];
    let mut runs = 0;
    for args in commands {
        for format in ["table", "json", "csv"] {
            let with = |extra: &[&'static str]| [args, &["--format", format], extra].concat();
            let fresh = cli(dir.path(), &with(&["--no-cache"]))?;
            let first = cli(dir.path(), &with(&[]))?;
            let second = cli(dir.path(), &with(&[]))?;
            let verified = cli(dir.path(), &with(&["--verify-cache"]))?;
            ensure(
                fresh == first && first == second && second == verified,
                || format!("{args:?} --format {format}: outputs differ"),
            )?;
            runs += 4;
        }
    }
    Ok(format!(
        "{runs} runs over 6 commands x 3 formats, cache hits equal fresh"
    ))
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        (
            "central charge exact and permutation invariant",
            c1_central_charge,
        ),
        ("weight enumeration count", c2_enumeration),
        (
            "S-matrix unitarity, symmetry, quantum dimensions",
            c3_modular,
        ),
        ("U(1) coset VP sum closed form", c4_u1_closed_form),
        (
            "VP selection rules and integral weight gaps",
            c5_vp_consistency,
        ),
        ("VP-sum factorization and stat_dim", c6_b_factorization),
        ("fixed-point structure and irrep counts", c7_fixed_points),
        ("level-rank duality fingerprints", c8_duality),
        ("G(1,1,k) VP group order", c9_minimal_models),
        ("CLI determinism and cache transparency", c10_determinism),
    ];
    let mut failures = 0;
    for (number, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2}: PASS  {name}: {detail} [{secs:.2}s]",
                number + 1
            ),
            Err(reason) => {
                failures += 1;
                println!(
                    "criterion {:>2}: FAIL  {name}: {reason} [{secs:.2}s]",
                    number + 1
                );
            }
        }
    }
    println!(
        "acceptance: {} passed, {failures} failed",
        criteria.len() - failures
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
