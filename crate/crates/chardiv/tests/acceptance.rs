//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero if any fails.

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use chardiv::output::census_csv;
use chardiv::parallel;
use chardiv_core::abacus::{core_tower, tower_to_partition};
use chardiv_core::census::{
    core_count, counting_bound, degree_divisibility_census, theorem_a_census, CensusKind,
    CensusReport,
};
use chardiv_core::character::{centralizer_order, cycle_type_sign, degree, CharacterEvaluator, CycleType};
use chardiv_core::partition::{enumerate_partitions, Partition};
use chardiv_core::valuation::{
    degree_valuation_hooks, degree_valuation_macdonald, falling_factorial_valuation, valuation_of,
};
use num_bigint::{BigInt, BigUint};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let spent = start.elapsed();
    if spent > limit {
        Err(format!("took {spent:?}, limit {limit:?}"))
    } else {
        Ok(())
    }
}

/// 1. v_q(f_λ) from the core tower equals the hook-length route, n ≤ 40.
fn macdonald_hook_equality() -> Outcome {
    let start = Instant::now();
    let mut checked = 0u64;
    for n in 0..=40 {
        for l in enumerate_partitions(n) {
            for q in [2, 3, 5, 7] {
                let tower = degree_valuation_macdonald(&l, q).map_err(|e| e.to_string())?;
                let hooks = degree_valuation_hooks(&l, q).map_err(|e| e.to_string())?;
                ensure!(tower == hooks, "{l} q={q}: tower {tower} vs hooks {hooks}");
                checked += 1;
            }
        }
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("{checked} (λ, q) pairs agree"))
}

/// 2. Tower roundtrip and Σ w_i q^i = n, n ≤ 25.
fn tower_bijection() -> Outcome {
    let start = Instant::now();
    let mut checked = 0u64;
    for n in 0..=25 {
        for l in enumerate_partitions(n) {
            for q in [2, 3, 5] {
                let tower = core_tower(&l, q).map_err(|e| e.to_string())?;
                ensure!(tower.weight_vector().weighted_size() == n, "{l} q={q}: weight");
                let back = tower_to_partition(&tower).map_err(|e| e.to_string())?;
                ensure!(back == l, "{l} q={q}: came back as {back}");
                checked += 1;
            }
        }
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("{checked} towers round-trip"))
}

/// 3. A^λ_μ is an integer for λ ⊢ n ≤ 14, μ ⊢ k ≤ 5.
fn lassalle_integrality() -> Outcome {
    let start = Instant::now();
    let mut checked = 0u64;
    for k in 0..=5 {
        for mu in enumerate_partitions(k) {
            let mut chi = CharacterEvaluator::new();
            for n in k..=14 {
                let ct = CycleType::new(mu.clone(), n).map_err(|e| e.to_string())?;
                for l in enumerate_partitions(n) {
                    let d = chi
                        .lassalle(&l, &ct)
                        .map_err(|e| format!("{l} at {mu}: {e}"))?;
                    ensure!(
                        &d.chi * BigInt::from(d.falling.clone()) == BigInt::from(d.degree.clone()) * &d.a,
                        "{l} at {mu}: identity fails"
                    );
                    checked += 1;
                }
            }
        }
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("{checked} decompositions are integral"))
}

/// 4. Column orthogonality (n ≤ 8), χ(identity) = f_λ (n ≤ 12), sign twist
///    under conjugation (n ≤ 10).
fn character_correctness() -> Outcome {
    let mut chi = CharacterEvaluator::new();
    for n in 0..=8 {
        let lambdas: Vec<Partition> = enumerate_partitions(n).collect();
        let classes: Vec<CycleType> = enumerate_partitions(n)
            .map(|s| CycleType::new(s, n).unwrap())
            .collect();
        let columns: Vec<Vec<BigInt>> = classes
            .iter()
            .map(|c| lambdas.iter().map(|l| chi.character(l, c).unwrap()).collect())
            .collect();
        for i in 0..classes.len() {
            for j in 0..classes.len() {
                let dot: BigInt = columns[i].iter().zip(&columns[j]).map(|(a, b)| a * b).sum();
                let expected = if i == j {
                    BigInt::from(centralizer_order(&classes[i].full_type()))
                } else {
                    BigInt::from(0)
                };
                ensure!(dot == expected, "n={n}: columns {i},{j} give {dot}");
            }
        }
    }
    for n in 0..=12 {
        let id = CycleType::identity(n);
        for l in enumerate_partitions(n) {
            ensure!(
                chi.character(&l, &id).unwrap() == BigInt::from(degree(&l)),
                "{l}: identity value is not the degree"
            );
        }
    }
    for n in 0..=10 {
        for k in 0..=n {
            for mu in enumerate_partitions(k) {
                let ct = CycleType::new(mu.clone(), n).unwrap();
                let sign = BigInt::from(cycle_type_sign(&ct));
                for l in enumerate_partitions(n) {
                    ensure!(
                        chi.character(&l.conjugate(), &ct).unwrap() == &sign * chi.character(&l, &ct).unwrap(),
                        "{l} at {mu}, n={n}: sign twist fails"
                    );
                }
            }
        }
    }
    Ok("orthogonality, identity and sign twist hold".into())
}

/// 5. v_q(χ) ≥ v_q(f_λ) − v_q((n)_k) whenever χ ≠ 0.
fn character_valuation_bound() -> Outcome {
    let mut checked = 0u64;
    for k in 0..=4 {
        for mu in enumerate_partitions(k) {
            let mut chi = CharacterEvaluator::new();
            for n in k.max(1)..=14 {
                let ct = CycleType::new(mu.clone(), n).unwrap();
                for l in enumerate_partitions(n) {
                    let value = chi.character(&l, &ct).unwrap();
                    for q in [2u64, 3] {
                        let Some(v) = valuation_of(&value, q) else { continue };
                        let f = degree_valuation_macdonald(&l, q).unwrap().0 as i64;
                        let falling = falling_factorial_valuation(n as u64, k as u64, q).unwrap().0 as i64;
                        ensure!(v.0 as i64 >= f - falling, "{l} at {mu} q={q}");
                        checked += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{checked} non-zero values satisfy the bound"))
}

fn counts(reports: &[CensusReport]) -> Vec<(BigUint, BigUint)> {
    reports
        .iter()
        .map(|r| (r.numerator.clone(), r.denominator.clone()))
        .collect()
}

fn strictly(reports: &[CensusReport], increasing: bool) -> bool {
    // a/b < c/d  ⇔  a·d < c·b
    reports.windows(2).all(|w| {
        let lhs = &w[0].numerator * &w[1].denominator;
        let rhs = &w[1].numerator * &w[0].denominator;
        if increasing { lhs < rhs } else { lhs > rhs }
    })
}

fn golden(values: &[(u32, u32)]) -> Vec<(BigUint, BigUint)> {
    values.iter().map(|&(a, b)| (a.into(), b.into())).collect()
}

/// 6. Degree divisibility by 2 at n = 10, 30, 50: increasing, last > 0.99.
fn degree_trend() -> Outcome {
    let start = Instant::now();
    let reports: Vec<_> = [10, 30, 50]
        .into_iter()
        .map(|n| degree_divisibility_census(n, 2).unwrap())
        .collect();
    within(start, Duration::from_secs(300))?;
    ensure!(
        counts(&reports) == golden(&[(26, 42), (4580, 5604), (203_202, 204_226)]),
        "counts differ from goldens: {:?}",
        counts(&reports)
    );
    ensure!(strictly(&reports, true), "ratios not strictly increasing");
    let last = &reports[2];
    ensure!(
        &last.numerator * 100u32 > &last.denominator * 99u32,
        "n=50 ratio {} is not above 0.99",
        last.ratio()
    );
    let ratios: Vec<_> = reports.iter().map(CensusReport::ratio).collect();
    Ok(format!("ratios {}", ratios.join(" < ")))
}

/// 7. Small-valuation proportion (q = 2, m = 0) at n = 10, 30, 50: decreasing.
fn theorem_a_trend() -> Outcome {
    let reports: Vec<_> = [10, 30, 50]
        .into_iter()
        .map(|n| theorem_a_census(n, 2, 0).unwrap())
        .collect();
    ensure!(
        counts(&reports) == golden(&[(36, 42), (3760, 5604), (80_928, 204_226)]),
        "counts differ from goldens: {:?}",
        counts(&reports)
    );
    ensure!(strictly(&reports, false), "ratios not strictly decreasing");
    let ratios: Vec<_> = reports.iter().map(CensusReport::ratio).collect();
    Ok(format!("ratios {}", ratios.join(" > ")))
}

/// 8. Counting bound for n ≤ 25, q ∈ {2,3}, b ≤ 2; c_2 ≤ 1 and c_3 ≤ 3n+1 for n ≤ 60.
fn counting_bound_and_cores() -> Outcome {
    for n in 1..=25 {
        for q in [2, 3] {
            for b in 0..=2 {
                let r = counting_bound(n, q, b).map_err(|e| e.to_string())?;
                ensure!(r.holds && r.chain_holds, "bound fails: {r}");
            }
        }
    }
    for n in 0..=60 {
        let c2 = core_count(n, 2).unwrap();
        let c3 = core_count(n, 3).unwrap();
        ensure!(c2 <= 1, "c_2({n}) = {c2}");
        ensure!(c3 <= 3 * n as u64 + 1, "c_3({n}) = {c3}");
    }
    Ok("150 bounds hold; core counts within limits".into())
}

/// 9. Census CSV is byte-identical for 1, 4 and 8 workers.
fn determinism() -> Outcome {
    let queries = [
        CensusKind::Degrees { d: 2 },
        CensusKind::Degrees { d: 6 },
        CensusKind::TheoremA { q: 3, m: 1 },
        CensusKind::Cores { q: 3 },
        CensusKind::Characters {
            mu: Partition::new(vec![2, 2]).unwrap(),
            d: 3,
        },
    ];
    let ns = [8, 15, 22];
    let render = |workers: usize| -> String {
        queries
            .iter()
            .map(|kind| census_csv(&parallel::trend_report(&ns, kind, workers).unwrap()))
            .collect()
    };
    let reference = render(1);
    for workers in [4, 8] {
        ensure!(render(workers) == reference, "{workers} workers differ from 1");
    }
    Ok(format!("{} bytes identical across 1/4/8 workers", reference.len()))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("Macdonald valuation equals hook valuation", macdonald_hook_equality),
        ("Core tower bijection and weight constraint", tower_bijection),
        ("Lassalle integrality", lassalle_integrality),
        ("Character correctness", character_correctness),
        ("Character valuation inequality", character_valuation_bound),
        ("Degree divisibility trend", degree_trend),
        ("Small-valuation trend", theorem_a_trend),
        ("Counting bound and core counts", counting_bound_and_cores),
        ("Census determinism across workers", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let spent = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS  {}. {name}: {detail} [{spent:.2?}]", i + 1),
            Err(reason) => {
                failed += 1;
                println!("FAIL  {}. {name}: {reason} [{spent:.2?}]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
