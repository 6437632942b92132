//! Acceptance criteria AC1-AC10, one PASS/FAIL line each.

use std::collections::BTreeSet;

use minitwistor::catalog::{
    enumerate_all, enumerate_marked, family_fibonacci, family_involutive, family_lebrun,
    fibonacci, growth_report, u1_classes, u1_key, U1Relation,
};
use minitwistor::conic_bundle::{discriminants, schedule_from};
use minitwistor::minitwistor::{quadratic_split, rhs_polynomial, singularities, SingularityRecord};
use minitwistor::rational::format_rational;
use minitwistor::toric_fan::{fan_from_sequence, sequence_from_fan};
use minitwistor::{ConformalInvariant, MarkedSequence, SequenceInvariants, Sign};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type CheckFn = fn() -> Check;

fn seq(s: &str) -> MarkedSequence {
    s.parse().expect("literal sequence is valid")
}

fn inv(s: &MarkedSequence) -> Result<SequenceInvariants, String> {
    SequenceInvariants::compute(s).map_err(|e| format!("{s}: {e}"))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_up_to(n_max: usize) -> Result<Vec<MarkedSequence>, String> {
    let mut out = Vec::new();
    for n in 0..=n_max {
        out.extend(enumerate_all(n).map_err(|e| e.to_string())?);
    }
    Ok(out)
}

fn ac1() -> Check {
    let deltas = (0..=5)
        .map(|n| u1_classes(n, U1Relation::BlockMultiset).map(|x| x.1))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    ensure(deltas == [1, 1, 2, 3, 7, 15], || format!("delta(0..5) = {deltas:?}"))?;
    let representatives = [
        "1,1,1,1,1",
        "1,2,1,1,1",
        "1,2,1,2,1",
        "1,2,3,1,1",
        "1,3,2,3,1",
        "1,2,5,3,1",
        "1,2,3,4,1",
    ];
    let (classes, _) = u1_classes(4, U1Relation::BlockMultiset).map_err(|e| e.to_string())?;
    let mut hit = BTreeSet::new();
    for p in representatives {
        let s = seq(p);
        let idx = classes
            .iter()
            .position(|c| c.members.contains(&s) || c.members.contains(&s.reversed()))
            .ok_or_else(|| format!("{p} lies in no class"))?;
        hit.insert(idx);
    }
    ensure(hit.len() == 7 && classes.len() == 7, || {
        format!("representatives hit {} of {} classes", hit.len(), classes.len())
    })?;
    Ok(format!("delta(0..5) = {deltas:?}; n=4 representatives match"))
}

fn ac2() -> Check {
    let table: [(usize, &str, &[u64], usize); 6] = [
        (2, "1,2,1", &[1, 1, 1, 1], 2),
        (3, "1,2,3,1", &[1, 1, 1, 2, 1], 3),
        (4, "1,2,5,3,1", &[1, 1, 3, 2, 2, 1], 5),
        (5, "1,2,5,8,3,1", &[1, 1, 3, 3, 5, 2, 1], 8),
        (6, "1,2,5,13,8,3,1", &[1, 1, 3, 8, 5, 5, 2, 1], 13),
        (7, "1,2,5,13,21,8,3,1", &[1, 1, 3, 8, 8, 13, 5, 2, 1], 21),
    ];
    for (n, s, l, m) in table {
        let f = family_fibonacci(n).map_err(|e| e.to_string())?;
        ensure(f == seq(s), || format!("n={n}: family gives {f}"))?;
        let x = inv(&f)?;
        ensure(x.l.l == l && x.m() == m && m as u64 == fibonacci(n + 1), || {
            format!("n={n}: l={:?} m={}", x.l.l, x.m())
        })?;
    }
    for n in 2..=8 {
        let mut best = 0;
        for s in enumerate_marked(n).map_err(|e| e.to_string())? {
            best = best.max(inv(&s)?.m());
        }
        let f = inv(&family_fibonacci(n).map_err(|e| e.to_string())?)?.m();
        ensure(best == f && best as u64 == fibonacci(n + 1), || {
            format!("n={n}: brute-force max m = {best}, family m = {f}")
        })?;
    }
    Ok("six table rows exact; max m = f(n+1) for n <= 8".into())
}

fn ac3() -> Check {
    let m = inv(&seq("1,2,1,2,1"))?.m();
    ensure(m == 3, || format!("m = {m}"))?;
    Ok("m((1,2,1,2,1)) = 3".into())
}

fn ac4() -> Check {
    let all = all_up_to(6)?;
    for s in &all {
        let x = inv(s)?;
        let n = s.n();
        let m = x.m() as u64;
        let l = &x.l.l;
        ensure(l[0] == 1 && l[n + 1] == 1, || format!("{s}: l ends {l:?}"))?;
        ensure(l.iter().sum::<u64>() == 2 * m, || format!("{s}: sum l != 2m"))?;
        ensure(m >= s.max_entry(), || format!("{s}: m < max k"))?;
        ensure(
            x.y.plus.iter().zip(&x.y.minus).all(|(p, q)| *p == 0 || *q == 0),
            || format!("{s}: both signs present"),
        )?;
        ensure(
            x.y.plus.iter().sum::<u64>() == m && x.y.minus.iter().sum::<u64>() == m,
            || format!("{s}: plus/minus sums"),
        )?;
        ensure(x.restriction.c[0] == m && x.restriction.c_bar[0] == m, || {
            format!("{s}: restriction on C_1")
        })?;
        for i in 2..=n + 2 {
            let k = s.k(i);
            ensure(
                x.restriction.c[i - 1] == m + k && x.restriction.c_bar[i - 1] + k == m,
                || format!("{s}: restriction at {i}"),
            )?;
        }
    }
    Ok(format!("{} sequences with n <= 6", all.len()))
}

fn ac5() -> Check {
    let all = all_up_to(6)?;
    for s in &all {
        let x = inv(s)?;
        let lam = ConformalInvariant::default_for(s.n());
        let f = rhs_polynomial(&x.l, &lam, Sign::Plus).map_err(|e| e.to_string())?;
        ensure(f.degree == 2 * x.m(), || format!("{s}: degree {}", f.degree))?;
    }
    for n in 0..=6 {
        let s = MarkedSequence::all_ones(n);
        let x = inv(&s)?;
        let lam = ConformalInvariant::default_for(n);
        let q = quadratic_split(&rhs_polynomial(&x.l, &lam, Sign::Plus).map_err(|e| e.to_string())?, 1)
            .map_err(|e| e.to_string())?;
        let pb: Vec<String> = q.pullback().coefficients.iter().map(format_rational).collect();
        ensure(pb == ["0", "1", "0"], || format!("n={n}: pullback {pb:?}"))?;
        ensure(singularities(&x.l, &lam, 1).is_empty(), || format!("n={n}: singular"))?;
    }
    Ok(format!("degree 2m for {} sequences; semi-free gives u1*u(n+2), smooth", all.len()))
}

fn real_orders(l: &minitwistor::LVector, n: usize, m: u64) -> Vec<u64> {
    singularities(l, &ConformalInvariant::default_for(n), m)
        .into_iter()
        .filter_map(|r| match r {
            SingularityRecord::RealA { order, .. } => Some(order),
            _ => None,
        })
        .collect()
}

fn ac6() -> Check {
    let s = seq("1,2,5,3,1");
    let x = inv(&s)?;
    let recs = singularities(&x.l, &ConformalInvariant::default_for(4), 5);
    ensure(
        matches!(recs.first(), Some(SingularityRecord::CyclicQuotientPair { order: 5, .. })),
        || "no Z_5 quotient pair".into(),
    )?;
    let orders = real_orders(&x.l, 4, 5);
    ensure(orders == [2, 1, 1], || format!("real orders {orders:?}"))?;
    let mut checked = 0;
    for n in 0..=8 {
        for s in enumerate_all(n).map_err(|e| e.to_string())? {
            if s.max_entry() <= 2 {
                let x = inv(&s)?;
                ensure(real_orders(&x.l, n, x.m() as u64).is_empty(), || format!("{s} singular"))?;
                checked += 1;
            }
        }
    }
    for n in 3..=10 {
        let f = family_fibonacci(n).map_err(|e| e.to_string())?;
        let x = inv(&f)?;
        let orders = real_orders(&x.l, n, x.m() as u64);
        for j in 3..=n {
            let want = fibonacci(j) - 1;
            ensure(want == 0 || orders.contains(&want), || {
                format!("n={n}: A_{want} missing from {orders:?}")
            })?;
        }
    }
    Ok(format!("Z_5 + A_2, A_1, A_1; {checked} {{1,2}}-sequences smooth; Fibonacci A_(f(j)-1) present"))
}

fn ac7() -> Check {
    for n in 3..=12 {
        let fam = family_lebrun(n).map_err(|e| e.to_string())?;
        ensure(fam.len() == n / 2 + 2, || format!("n={n}: {} members", fam.len()))?;
        let mut positive = Vec::new();
        for s in &fam {
            let x = inv(s)?;
            if x.regularity.slack.unwrap_or(0) > 0 {
                positive.push((s.clone(), x.regularity.slack));
            }
        }
        let mut want: Vec<u64> = (1..n as u64).collect();
        want.extend([1, 1]);
        ensure(
            positive.len() == 1 && positive[0].0.entries() == want && positive[0].1 == Some(1),
            || format!("n={n}: positive-slack members {positive:?}"),
        )?;
    }
    for n in 1..=12 {
        for (c, s) in family_involutive(n).map_err(|e| e.to_string())?.iter().enumerate() {
            let slack = inv(s)?.regularity.slack;
            let want = (c > 0).then(|| n as i64 - 2 * c as i64);
            ensure(slack == want, || format!("{s}: slack {slack:?}, want {want:?}"))?;
        }
    }
    Ok("LeBrun: only (1,...,n-1,1,1) has slack 1 (n=3..12); involutive slack n-2c (n=1..12)".into())
}

fn ac8() -> Check {
    let all = all_up_to(6)?;
    let mut reconciled = 0;
    for s in &all {
        let x = inv(s)?;
        let n = s.n();
        let (joyce, deformed) = discriminants(&x).map_err(|e| e.to_string())?;
        if let Some(d) = deformed {
            let (r, s_idx, slack) = (
                x.regularity.r.unwrap_or(0),
                x.regularity.s.unwrap_or(0),
                x.regularity.slack.unwrap_or(-1),
            );
            ensure(d.hyperplane_sections as i64 == n as i64 + r as i64 - s_idx as i64, || {
                format!("{s}: hyperplane count")
            })?;
            ensure(d.reducible_fiber_chains == joyce.reducible_fiber_chains, || {
                format!("{s}: chains differ")
            })?;
            let mut union: Vec<usize> = d.irreducible_fibers.clone();
            union.extend(&d.moved_to_hyperplane_sections);
            union.sort();
            ensure(union == joyce.irreducible_fibers, || format!("{s}: irreducible sets"))?;
            ensure(d.moved_to_hyperplane_sections.len() as i64 == slack, || {
                format!("{s}: moved count")
            })?;
            reconciled += 1;
        }
        let sched = schedule_from(&x).map_err(|e| e.to_string())?;
        let want = if x.m() == 1 { 1 } else { x.l.max() as usize + 2 };
        ensure(sched.stages.len() == want, || format!("{s}: {} stages", sched.stages.len()))?;
    }
    Ok(format!("{reconciled} deformed reports reconciled; schedules M+2 / 1 stage"))
}

fn ac9() -> Check {
    let all = all_up_to(6)?;
    for s in &all {
        let fan = fan_from_sequence(s).map_err(|e| e.to_string())?;
        let back = sequence_from_fan(&fan, 1).map_err(|e| e.to_string())?;
        ensure(back == *s, || format!("{s} -> {back}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let pools: Vec<Vec<MarkedSequence>> = (0..=6)
        .map(enumerate_all)
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    for trial in 0..100 {
        let n = rng.gen_range(0..=6);
        let s = &pools[n][rng.gen_range(0..pools[n].len())];
        let mut acc = BigRational::from_integer(BigInt::from(0));
        let mut interior = Vec::new();
        for _ in 0..n {
            let step = BigRational::new(BigInt::from(rng.gen_range(1..=9)), BigInt::from(rng.gen_range(1..=7)));
            acc += step;
            interior.push(acc.clone());
        }
        let lam = ConformalInvariant::from_interior(interior).map_err(|e| e.to_string())?;
        let c = if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
        let x = inv(s)?;
        let f = rhs_polynomial(&x.l, &lam, c).map_err(|e| e.to_string())?;
        let q = quadratic_split(&f, x.m()).map_err(|e| e.to_string())?;
        ensure(q.pullback() == f, || format!("trial {trial}: {s} pullback mismatch"))?;
    }
    Ok(format!("{} fan round trips; 100 seeded pullback round trips", all.len()))
}

fn ac10() -> Check {
    let rows = growth_report(8, U1Relation::BlockMultiset).map_err(|e| e.to_string())?;
    for w in rows.windows(2) {
        ensure(w[1].delta >= w[0].delta, || format!("delta drops at n={}", w[1].n))?;
    }
    for n in 1..=8 {
        let prev = enumerate_marked(n - 1).map_err(|e| e.to_string())?;
        let prev_keys: BTreeSet<_> = prev.iter().map(|s| u1_key(s, U1Relation::BlockMultiset)).collect();
        let images: BTreeSet<_> = prev
            .iter()
            .map(|s| {
                let mut k = vec![1];
                k.extend_from_slice(s.entries());
                let grown = MarkedSequence::new(k).expect("prepending 1 keeps validity");
                u1_key(&grown, U1Relation::BlockMultiset)
            })
            .collect();
        ensure(images.len() == prev_keys.len(), || format!("end insertion collides at n={n}"))?;
    }
    let ratios: Vec<String> = rows
        .iter()
        .map(|r| r.ratio.as_ref().map_or("-".into(), format_rational))
        .collect();
    let deltas: Vec<usize> = rows.iter().map(|r| r.delta).collect();
    Ok(format!("delta(0..8) = {deltas:?}; delta/n^2 = [{}]", ratios.join(", ")))
}

fn main() {
    let checks: [(&str, CheckFn); 10] = [
        ("AC1", ac1),
        ("AC2", ac2),
        ("AC3", ac3),
        ("AC4", ac4),
        ("AC5", ac5),
        ("AC6", ac6),
        ("AC7", ac7),
        ("AC8", ac8),
        ("AC9", ac9),
        ("AC10", ac10),
    ];
    let mut failed = 0;
    for (name, check) in checks {
        match check() {
            Ok(detail) => println!("{name} PASS {detail}"),
            Err(why) => {
                failed += 1;
                println!("{name} FAIL {why}");
            }
        }
    }
    match u1_classes(5, U1Relation::CollapsedWord) {
        Ok((_, d)) => println!("info: collapsed-word relation gives delta(5) = {d}"),
        Err(e) => println!("info: collapsed-word relation failed: {e}"),
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 10 acceptance criteria passed");
}
