//! Acceptance suite. One line per criterion, nonzero exit on any failure.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use charvar_cli::commands::charvar_document;
use charvar_cli::zahid_document;
use charvar_core::arrangement::{
    betti, characteristic_variety, check_hypotheses, orbifold_group, special_fiber_divisor,
    CITED_NOTES, PULLBACK_DIRECTION,
};
use charvar_core::bivar::{build_f, is_irreducible_y_linear};
use charvar_core::decompose::{
    connectivity_certificate, is_decomposable, uni_decompose_at, CertificateStatus, Decomposition,
};
use charvar_core::expr::{parse_bi, parse_uni, print_bi, print_uni};
use charvar_core::factor::{power_index, squarefree_decompose};
use charvar_core::poly::{frac, rat, Rational, UniPoly};
use charvar_core::BiPoly;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    frac(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

fn nonzero_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let r = small_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

fn random_uni(rng: &mut ChaCha8Rng, degrees: std::ops::RangeInclusive<usize>) -> UniPoly {
    let degree = rng.gen_range(degrees);
    let mut c: Vec<Rational> = (0..degree).map(|_| small_rational(rng)).collect();
    c.push(nonzero_rational(rng));
    UniPoly::new(c)
}

fn from_roots(roots: &[(i64, u32)]) -> UniPoly {
    roots.iter().fold(UniPoly::one(), |acc, &(a, m)| {
        &acc * &UniPoly::linear_root(rat(a)).pow(m)
    })
}

/// `k` distinct integers from `-6..=6`.
fn distinct_roots(rng: &mut ChaCha8Rng, k: usize) -> Vec<i64> {
    let mut pool: Vec<i64> = (-6..=6).collect();
    pool.shuffle(rng);
    pool.truncate(k);
    pool
}

/// Admissible `(p, q)` over integer roots. `p` gets the given multiplicity
/// range; the planted root set is returned alongside.
fn planted_admissible(
    rng: &mut ChaCha8Rng,
    p_mult: std::ops::RangeInclusive<u32>,
) -> (UniPoly, UniPoly, Vec<i64>) {
    loop {
        let k = rng.gen_range(2..=6);
        let roots = distinct_roots(rng, k);
        let np = rng.gen_range(1..roots.len());
        let p_roots: Vec<(i64, u32)> = roots[..np]
            .iter()
            .map(|&a| (a, rng.gen_range(p_mult.clone())))
            .collect();
        // q shares the first root of p and takes a random subset of the rest
        let mut q_roots = vec![(roots[0], rng.gen_range(1..=2))];
        for &a in &roots[1..] {
            if rng.gen_bool(0.5) {
                q_roots.push((a, rng.gen_range(1..=2)));
            }
        }
        let unit = nonzero_rational(rng);
        let p = from_roots(&p_roots).scale(&unit);
        let q = from_roots(&q_roots).scale(&nonzero_rational(rng));
        if check_hypotheses(&p, &q).unwrap().satisfied {
            return (p, q, roots);
        }
    }
}

/// Distinct roots of `a` among `candidates`, by trial division by `x - r`.
fn trial_division_count(a: &UniPoly, candidates: &[i64]) -> usize {
    candidates
        .iter()
        .filter(|&&r| {
            let (_, rem) = a.divrem(&UniPoly::linear_root(rat(r))).unwrap();
            rem.is_zero()
        })
        .count()
}

fn criterion_1() -> Check {
    let start = Instant::now();
    for p in 1..=6u32 {
        for q in 1..=4u32 {
            let doc = zahid_document(p, q).map_err(|e| format!("zahid {p} {q}: {e}"))?;
            let expected: Vec<[String; 2]> = (1..p)
                .map(|j| {
                    let t = Rational::new(j.into(), p.into());
                    [format!("{}/{}", t.numer(), t.denom()), "0/1".to_string()]
                })
                .collect();
            let got: Vec<[String; 2]> = doc.components.iter().map(|c| c.torsion.clone()).collect();
            ensure(got == expected, || format!("zahid {p} {q}: torsion {got:?}"))?;
            ensure(doc.components.iter().all(|c| c.direction == [0, 1]), || {
                format!("zahid {p} {q}: direction")
            })?;
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("24 reports, {elapsed:.2?}"))
}

fn criterion_2(rng: &mut ChaCha8Rng) -> Check {
    let start = Instant::now();
    for _ in 0..100 {
        let (p, q, _) = planted_admissible(rng, 1..=1);
        let report = characteristic_variety(&p, &q).map_err(|e| e.to_string())?;
        ensure(report.components.is_empty(), || {
            format!("p = {p}, q = {q}: {} components", report.components.len())
        })?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(5))?;
    Ok(format!("100 squarefree samples, {elapsed:.2?}"))
}

fn criterion_3(rng: &mut ChaCha8Rng) -> Check {
    for _ in 0..100 {
        let (p, q, roots) = planted_admissible(rng, 1..=3);
        let b = betti(&p, &q).map_err(|e| e.to_string())?;
        let s = trial_division_count(&q, &roots);
        let t = trial_division_count(&(&p * &q), &roots);
        ensure(b.s == s && b.t == t && b.b2 == s + t, || {
            format!("p = {p}, q = {q}: got {b:?}, brute force s = {s}, t = {t}")
        })?;
    }
    Ok("100 samples".to_string())
}

/// Random `unit * prod (x - a_i)^{m_i}` with its planted data.
fn planted_power_product(rng: &mut ChaCha8Rng) -> (UniPoly, Rational, Vec<(i64, u32)>) {
    let k = rng.gen_range(1..=4);
    let roots = distinct_roots(rng, k);
    let common = rng.gen_range(1..=3);
    let planted: Vec<(i64, u32)> = roots
        .iter()
        .map(|&a| (a, common * rng.gen_range(1..=3)))
        .collect();
    let unit = nonzero_rational(rng);
    (from_roots(&planted).scale(&unit), unit, planted)
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn criterion_4(rng: &mut ChaCha8Rng) -> Check {
    for _ in 0..200 {
        let (a, unit, planted) = planted_power_product(rng);
        let sqf = squarefree_decompose(&a).map_err(|e| e.to_string())?;
        let mut mults: Vec<u32> = planted.iter().map(|&(_, m)| m).collect();
        mults.sort_unstable();
        mults.dedup();
        let expected: Vec<(UniPoly, u32)> = mults
            .iter()
            .map(|&m| {
                let layer: Vec<(i64, u32)> =
                    planted.iter().filter(|e| e.1 == m).map(|&(r, _)| (r, 1)).collect();
                (from_roots(&layer), m)
            })
            .collect();
        let got: Vec<(UniPoly, u32)> = sqf
            .parts
            .iter()
            .map(|part| (part.factor.clone(), part.multiplicity))
            .collect();
        ensure(got == expected && sqf.unit == unit, || {
            format!("{a}: profile {got:?}, planted {planted:?}")
        })?;
        ensure(sqf.reconstruct() == a, || format!("{a}: reconstruction"))?;
        let d = planted.iter().fold(0, |g, &(_, m)| gcd(g, m));
        let pi = power_index(&a).map_err(|e| e.to_string())?;
        ensure(pi.d == d, || format!("{a}: power index {} != {d}", pi.d))?;
        ensure(pi.base.pow(pi.d).scale(&pi.unit) == a, || {
            format!("{a}: power reconstruction")
        })?;
    }
    Ok("200 samples".to_string())
}

fn criterion_5(rng: &mut ChaCha8Rng) -> Check {
    for _ in 0..200 {
        let (p, _, _) = planted_power_product(rng);
        let divisor = special_fiber_divisor(&p).map_err(|e| e.to_string())?;
        let d = power_index(&p).map_err(|e| e.to_string())?.d;
        let order = orbifold_group(&p).map_err(|e| e.to_string())?;
        ensure(divisor.divisor_multiplicity == d && d == order, || {
            format!("{p}: {} / {d} / {order}", divisor.divisor_multiplicity)
        })?;
    }
    for _ in 0..100 {
        let (p, q, _) = planted_admissible(rng, 1..=4);
        let report = characteristic_variety(&p, &q).map_err(|e| e.to_string())?;
        let d = power_index(&p).map_err(|e| e.to_string())?.d;
        ensure(
            report.divisor.divisor_multiplicity == d && report.orbifold_order == d,
            || format!("p = {p}, q = {q}"),
        )?;
    }
    Ok("300 samples".to_string())
}

/// Solve `m x = rhs` over Q; `None` when inconsistent.
fn solve(mut m: Vec<Vec<Rational>>, cols: usize) -> Option<Vec<Rational>> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(pr) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, pr);
        let lead = m[row][col].clone();
        for v in m[row].iter_mut() {
            *v /= &lead;
        }
        for i in 0..m.len() {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..=cols {
                    let sub = &f * &m[row][j];
                    m[i][j] -= sub;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if m[row..].iter().any(|r| !r[cols].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][cols].clone();
    }
    Some(x)
}

/// Brute force: the top `e` coefficients of `P / lc` fix the monic inner
/// `Q` one unknown at a time by matching `x^{n-k}` in `Q^r`; the outer is
/// then the solution of the dense system `P = sum h_i Q^i`.
fn brute_force_decompose(p: &UniPoly, e: usize) -> Option<Decomposition> {
    let n = p.degree()?;
    let r = (n / e) as u32;
    let monic = p.monic();
    let mut q = vec![Rational::zero(); e + 1];
    q[e] = Rational::one();
    for k in 1..e {
        // x^{n-k} coefficient of Q^r is affine in q_{e-k} with slope r
        q[e - k] = Rational::zero();
        let base = UniPoly::new(q.clone()).pow(r).coeff(n - k);
        q[e - k] = Rational::one();
        let slope = UniPoly::new(q.clone()).pow(r).coeff(n - k) - &base;
        q[e - k] = (monic.coeff(n - k) - base) / slope;
    }
    let inner = UniPoly::new(q);
    let powers: Vec<UniPoly> = (0..=r).map(|i| inner.pow(i)).collect();
    let rows: Vec<Vec<Rational>> = (0..=n)
        .map(|row| {
            let mut v: Vec<Rational> = powers.iter().map(|qp| qp.coeff(row)).collect();
            v.push(p.coeff(row));
            v
        })
        .collect();
    let h = solve(rows, r as usize + 1)?;
    Some(Decomposition {
        outer: UniPoly::new(h),
        inner,
    })
}

fn criterion_6(rng: &mut ChaCha8Rng) -> Check {
    let mut cross_checked = 0;
    for _ in 0..100 {
        let h = random_uni(rng, 2..=4);
        let e = rng.gen_range(2..=4);
        let mut qc = vec![Rational::zero()];
        qc.extend((1..e).map(|_| small_rational(rng)));
        qc.push(Rational::one());
        let q = UniPoly::new(qc);
        let p = h.compose(&q);
        let d = uni_decompose_at(&p, e)
            .map_err(|err| err.to_string())?
            .ok_or_else(|| format!("{p}: planted H = {h}, Q = {q} not found"))?;
        ensure(d.outer == h && d.inner == q, || {
            format!("{p}: got ({}, {}), planted ({h}, {q})", d.outer, d.inner)
        })?;
        if p.degree().unwrap() <= 8 {
            let slow = brute_force_decompose(&p, e);
            ensure(slow.as_ref() == Some(&d), || format!("{p}: brute force {slow:?}"))?;
            cross_checked += 1;
        }
    }
    for _ in 0..100 {
        let n = *[2usize, 3, 5, 7].choose(rng).unwrap();
        let p = random_uni(rng, n..=n);
        ensure(!is_decomposable(&p), || format!("prime degree {p} decomposed"))?;
    }
    for _ in 0..100 {
        let n = *[4usize, 6, 8].choose(rng).unwrap();
        let p = random_uni(rng, n..=n);
        for e in (2..=n / 2).filter(|e| n % e == 0) {
            let fast = uni_decompose_at(&p, e).map_err(|err| err.to_string())?;
            ensure(fast == brute_force_decompose(&p, e), || format!("{p} at {e}"))?;
        }
        cross_checked += 1;
    }
    Ok(format!("100 round-trips, 100 prime-degree, {cross_checked} brute-force cross-checks"))
}

fn criterion_7() -> Check {
    let start = Instant::now();
    let polys = [
        UniPoly::x(),
        UniPoly::x().pow(2),
        UniPoly::from_ints(&[0, 1, 1]),
    ];
    let mut count = 0;
    for p in &polys {
        for m in [2, 3] {
            for n in [2, 3] {
                for c in [rat(1), rat(-2)] {
                    let cert = connectivity_certificate(p, m, n, &c).map_err(|e| e.to_string())?;
                    ensure(
                        cert.status == CertificateStatus::ConnectedCertified
                            && cert.singular_finite
                            && !cert.eliminants.0.is_zero()
                            && !cert.eliminants.1.is_zero(),
                        || format!("p = {p}, m = {m}, n = {n}, c = {c}: {:?}", cert.status),
                    )?;
                    count += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(10))?;
    Ok(format!("{count} certificates, {elapsed:.2?}"))
}

fn criterion_8(rng: &mut ChaCha8Rng) -> Check {
    let mut reducible = 0;
    for i in 0..200 {
        let mut p = random_uni(rng, 1..=3);
        let mut q = random_uni(rng, 1..=3);
        if i % 2 == 0 {
            // force p + 1 and q to share the root a
            let shift = UniPoly::linear_root(rat(rng.gen_range(-3..=3)));
            p = &(&shift * &p) - &UniPoly::one();
            q = &shift * &q;
        }
        let f = build_f(&p, &q).map_err(|e| e.to_string())?;
        let flag = (&p + &UniPoly::one()).gcd(&q).unwrap().is_constant();
        let irreducible = is_irreducible_y_linear(&f).map_err(|e| e.to_string())?;
        ensure(irreducible == flag, || format!("p = {p}, q = {q}"))?;
        reducible += usize::from(!flag);
    }
    Ok(format!("200 samples, {reducible} reducible"))
}

fn random_bi(rng: &mut ChaCha8Rng) -> BiPoly {
    let ny = rng.gen_range(0..=3);
    BiPoly::new(
        (0..ny)
            .map(|_| {
                let nx = rng.gen_range(0..=4);
                UniPoly::new((0..nx).map(|_| small_rational(rng)).collect())
            })
            .collect(),
    )
}

const FUZZ_PIECES: &[&str] = &[
    "x", "y", "z", "0", "1", "7", "12", "4096", "4097", "99999999999999999999", "/", "/0", "+",
    "-", "*", "^", "^2", "(", ")", " ", "2x", "x^-1", "(x+1)^40", "^^", "\u{e9}", "\t",
];

fn fuzz_input(rng: &mut ChaCha8Rng) -> String {
    if rng.gen_bool(0.3) {
        let len = rng.gen_range(0..24);
        let bytes: Vec<u8> = (0..len).map(|_| rng.gen_range(0x20..0x7f)).collect();
        return String::from_utf8(bytes).unwrap();
    }
    let len = rng.gen_range(0..16);
    (0..len)
        .map(|_| *FUZZ_PIECES.choose(rng).unwrap())
        .collect()
}

fn criterion_9(rng: &mut ChaCha8Rng) -> Check {
    for _ in 0..250 {
        let a = random_bi(rng);
        let text = print_bi(&a);
        let back = parse_bi(&text).map_err(|e| format!("{text}: {e}"))?;
        ensure(back == a, || format!("{text} reparsed as {back:?}"))?;
        let u = random_uni(rng, 0..=6);
        let text = print_uni(&u);
        let back = parse_uni(&text).map_err(|e| format!("{text}: {e}"))?;
        ensure(back == u, || format!("{text} reparsed as {back}"))?;
    }
    let mut rejected = 0;
    for _ in 0..10_000 {
        let input = fuzz_input(rng);
        let outcome = panic::catch_unwind(|| (parse_bi(&input).is_err(), parse_uni(&input).is_err()));
        match outcome {
            Ok((_, uni_err)) => rejected += usize::from(uni_err),
            Err(_) => return Err(format!("parser panicked on {input:?}")),
        }
    }
    Ok(format!("500 round-trips, 10000 fuzzed inputs ({rejected} rejected)"))
}

fn criterion_10() -> Check {
    let p = UniPoly::x().pow(2);
    let q = UniPoly::x();
    let report = characteristic_variety(&p, &q).map_err(|e| e.to_string())?;
    let doc = charvar_document(&p, &q).map_err(|e| e.to_string())?;
    let json = doc.to_json();
    let text = doc.to_text();
    for note in CITED_NOTES {
        ensure(report.notes.iter().any(|n| n == note), || format!("missing {note}"))?;
        ensure(json.contains(note) && text.contains(note), || {
            format!("rendered report lacks {note}")
        })?;
    }
    for topic in ["dim H^1", "finitely many exceptional", "resonance", "cup product"] {
        ensure(
            doc.notes
                .iter()
                .any(|n| n.starts_with("cited, not verified:") && n.contains(topic)),
            || format!("no cited note on {topic}"),
        )?;
    }
    ensure(report.components.iter().all(|c| c.direction() == PULLBACK_DIRECTION), || {
        "direction".to_string()
    })?;
    Ok(format!("{} cited notes present", CITED_NOTES.len()))
}

fn main() -> ExitCode {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    let criteria: Vec<(&str, Box<dyn FnOnce(&mut ChaCha8Rng) -> Check>)> = vec![
        ("zahid family", Box::new(|_| criterion_1())),
        ("non-power branch", Box::new(criterion_2)),
        ("betti numbers", Box::new(criterion_3)),
        ("squarefree oracle", Box::new(criterion_4)),
        ("divisor and orbifold order", Box::new(criterion_5)),
        ("decomposition round-trip", Box::new(criterion_6)),
        ("connectivity certificates", Box::new(|_| criterion_7())),
        ("hypothesis and irreducibility", Box::new(criterion_8)),
        ("parser round-trip and fuzz", Box::new(criterion_9)),
        ("cited notes", Box::new(|_| criterion_10())),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(|| run(&mut rng)))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
