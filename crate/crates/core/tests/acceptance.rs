//! Exit criteria. Every check is exact integer equality; each criterion
//! prints one PASS/FAIL line and the test fails if any criterion fails.

use std::time::{Duration, Instant};

use burnside_kit::oracles::{brute_fixed_count, construct_pi, cycles_action, subsets_action, words_action};
use burnside_kit::theorems::{
    corollary_fermat_check, corollary_wilson_check, cycle_fixed_count, fermat_check, fermat_sum, lucas_inner_sum,
    lucas_params, lucas_prime_reduce, lucas_sum, necklace_count, wilson_check, wilson_sum,
};
use burnside_kit::{binomial, divisors, factorial, is_prime, residue, CyclicAction, Natural, DEFAULT_BUDGET};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn nat(x: u64) -> Natural {
    Natural::from(x)
}

fn paper_example() -> Outcome {
    let pi = construct_pi(12, 4, 8, &[9, 6, 3]).map_err(|e| e.to_string())?;
    ensure(pi.entries() == [0, 9, 6, 3, 8, 5, 2, 11, 4, 1, 10, 7], || format!("pi = {:?}", pi.entries()))?;
    ensure(pi.stabilizer() == [0, 4, 8], || format!("stabilizer = {:?}", pi.stabilizer()))?;
    let count = cycle_fixed_count::<Natural>(12, 4).map_err(|e| e.to_string())?;
    ensure(count == nat(324), || format!("cycle_fixed_count(12,4) = {count}"))
}

fn totient_identity() -> Outcome {
    for n in 1..=1000 {
        let s = fermat_sum::<Natural>(1, n).map_err(|e| e.to_string())?;
        ensure(s == nat(n), || format!("fermat_sum(1,{n}) = {s}"))?;
    }
    Ok(())
}

fn fermat_sweep() -> Outcome {
    for n in 1..=60 {
        for a in 0..=10 {
            ensure(fermat_check(a, n) == Ok(true), || format!("{n} does not divide fermat_sum({a},{n})"))?;
        }
    }
    for a in 0..=3 {
        for n in 1..=10 {
            let closed = necklace_count::<Natural>(a, n).map_err(|e| e.to_string())?;
            let action = words_action(a, n, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
            let direct = action.orbit_count_direct();
            ensure(closed == nat(direct), || format!("necklaces a={a} n={n}: {closed} vs {direct}"))?;
        }
    }
    ensure(necklace_count::<Natural>(2, 4) == Ok(nat(6)), || "necklace_count(2,4) != 6".into())
}

fn wilson_sweep() -> Outcome {
    for n in 1..=14 {
        ensure(wilson_check(n) == Ok(true), || format!("{n} does not divide wilson_sum({n})"))?;
    }
    ensure(wilson_sum::<Natural>(7) == Ok(nat(756)), || "wilson_sum(7) != 756".into())?;
    let w12 = wilson_sum::<Natural>(12).map_err(|e| e.to_string())?;
    ensure(residue(&w12, 12) == Ok(0), || format!("wilson_sum(12) = {w12} not 0 mod 12"))?;
    for n in 1..=9 {
        let action = cycles_action(n, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        for d in divisors(n).unwrap().iter() {
            let brute = brute_fixed_count(&action, d).map_err(|e| e.to_string())?;
            let closed = cycle_fixed_count::<Natural>(n, d).map_err(|e| e.to_string())?;
            ensure(nat(brute) == closed, || format!("cycles n={n} d={d}: brute {brute} vs {closed}"))?;
        }
    }
    Ok(())
}

fn lucas_sweep() -> Outcome {
    for n in 1..=8 {
        for m in 0..=24 {
            for r in 0..=m {
                let sum = lucas_sum::<Natural>(n, m, r).map_err(|e| e.to_string())?;
                ensure(residue(&sum, n) == Ok(0), || format!("{n} does not divide lucas_sum({n},{m},{r}) = {sum}"))?;
                let params = lucas_params(n, m, r).unwrap();
                let whole = lucas_inner_sum::<Natural>(&params, n).map_err(|e| e.to_string())?;
                let expected = binomial::<Natural>(m, r as i64).unwrap();
                ensure(whole == expected, || format!("inner sum at d=n for ({n},{m},{r}) = {whole}"))?;
            }
        }
    }
    for n in 1..=4 {
        for m in 0..=12 {
            for r in 0..=m {
                let action = subsets_action(n, m, r, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
                let params = lucas_params(n, m, r).unwrap();
                for d in divisors(n).unwrap().iter() {
                    let brute = brute_fixed_count(&action, d).map_err(|e| e.to_string())?;
                    let closed = lucas_inner_sum::<Natural>(&params, d).map_err(|e| e.to_string())?;
                    ensure(nat(brute) == closed, || format!("subsets ({n},{m},{r}) d={d}: {brute} vs {closed}"))?;
                }
            }
        }
    }
    ensure(lucas_sum::<Natural>(2, 5, 2) == Ok(nat(12)), || "lucas_sum(2,5,2) != 12".into())?;
    let p = lucas_params(2, 5, 2).unwrap();
    ensure(lucas_inner_sum::<Natural>(&p, 2) == Ok(nat(10)), || "inner sum at d=2 != 10".into())
}

fn lucas_corollary() -> Outcome {
    for p in [2, 3, 5, 7, 11] {
        for m in 0..=100 {
            for r in 0..=m {
                let direct = residue(&binomial::<Natural>(m, r as i64).unwrap(), p).unwrap();
                let reduced = lucas_prime_reduce(p, m, r).map_err(|e| e.to_string())?;
                ensure(direct == reduced, || format!("p={p} m={m} r={r}: {reduced} vs {direct}"))?;
            }
        }
    }
    ensure(lucas_prime_reduce(3, 10, 4) == Ok(0), || "lucas_prime_reduce(3,10,4) != 0".into())
}

fn classical_corollaries() -> Outcome {
    for p in (2..=13).filter(|&p| is_prime(p)) {
        for a in 0..=50 {
            let ap = Natural::from(a).pow(p as u32);
            ensure(residue(&ap, p) == residue(&nat(a), p), || format!("{a}^{p} != {a} mod {p}"))?;
            ensure(corollary_fermat_check(a, p) == Ok(true), || format!("corollary_fermat_check({a},{p})"))?;
            let shape = nat(p - 1) * nat(a) + ap;
            ensure(fermat_sum::<Natural>(a, p) == Ok(shape), || format!("fermat_sum({a},{p}) shape"))?;
        }
        let fact = factorial::<Natural>(p - 1).unwrap();
        ensure(residue(&fact, p) == Ok(p - 1), || format!("({p}-1)! != -1 mod {p}"))?;
        ensure(corollary_wilson_check(p) == Ok(true), || format!("corollary_wilson_check({p})"))?;
        let shape = nat(p - 1).pow(2) + fact;
        ensure(wilson_sum::<Natural>(p) == Ok(shape), || format!("wilson_sum({p}) shape"))?;
    }
    Ok(())
}

fn engine_soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..200 {
        let n = rng.gen_range(1..=24u64);
        let size = rng.gen_range(0..=2000usize);
        let action = CyclicAction::random(n, size, &mut rng).map_err(|e| e.to_string())?;
        let direct = action.orbit_count_direct();
        let burnside = action.orbit_count_burnside().map_err(|e| e.to_string())?;
        ensure(direct == burnside, || format!("trial {trial}: direct {direct} vs burnside {burnside}"))?;
        let total = action.fixed_point_total();
        ensure(total % n as u128 == 0, || format!("trial {trial}: sum of fixed points {total} mod {n}"))?;
        ensure(action.gcd_collapse_check(), || format!("trial {trial}: gcd collapse fails"))?;
    }
    Ok(())
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Outcome, u64); 8] = [
        ("1 paper example cycle, stabilizer and 324", paper_example, 1),
        ("2 totient identity n <= 1000", totient_identity, 1),
        ("3 fermat sweep and necklace oracle", fermat_sweep, 10),
        ("4 wilson sweep and cycles oracle", wilson_sweep, 60),
        ("5 lucas sweep and subsets oracle", lucas_sweep, 60),
        ("6 lucas corollary p <= 11, m <= 100", lucas_corollary, 5),
        ("7 classical corollaries p <= 13", classical_corollaries, 1),
        ("8 engine soundness on 200 random actions", engine_soundness, 10),
    ];
    let mut failures = Vec::new();
    for (name, run, limit_secs) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let verdict = match &outcome {
            Ok(()) => "PASS",
            Err(_) => "FAIL",
        };
        let over = elapsed > Duration::from_secs(limit_secs);
        println!("[{verdict}] criterion {name} ({:.2?}, limit {limit_secs}s)", elapsed);
        if let Err(msg) = outcome {
            println!("       {msg}");
            failures.push(name);
        } else if over {
            println!("       exceeded time limit");
            failures.push(name);
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
