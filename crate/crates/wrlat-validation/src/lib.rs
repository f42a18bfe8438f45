//! End-to-end acceptance criteria. Each criterion recomputes its evidence from scratch
//! and reports a verdict with a one-line summary of what was checked.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wrlat_core::certify::{self, CubicKind, Fault};
use wrlat_core::decompose::{decompose_prime, decompose_prime_quartic, predicted_quartic_shape, stable_subspace_primes};
use wrlat_core::ideal::{enumerate_primitive_ideals, trace_sublattice};
use wrlat_core::lattice::{naive_radius, naive_shortest, shortest_vectors, wr_report, GramForm};
use wrlat_core::numtheory::{enumerate_conductors, factorize, primes_up_to};
use wrlat_core::survey::{self, quartic_corpus, ScanConfig};
use wrlat_core::{Field, IdealLattice, Result};

/// Verdict of one criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub pass: bool,
    pub detail: String,
}

/// Collects failure messages and keeps the first few for the report.
#[derive(Default)]
struct Tally {
    checked: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn outcome(self, summary: String) -> Outcome {
        let pass = self.failures.is_empty();
        let mut detail = format!("{summary}; {} checks", self.checked);
        if !pass {
            let shown: Vec<&str> = self.failures.iter().take(5).map(String::as_str).collect();
            detail += &format!(", {} failures: {}", self.failures.len(), shown.join(" | "));
        }
        Outcome { pass, detail }
    }
}

fn cubic(m: u64) -> Result<Arc<Field>> {
    Field::cubic(m).map(Arc::new)
}

fn quartic((a, b, c, d): (i64, i64, i64, i64)) -> Result<Arc<Field>> {
    Field::quartic(a, b, c, d).map(Arc::new)
}

/// The quartic corpus shared by the decomposition and unique-prime criteria.
pub fn quartic_fields(amax: i64, dmax: i64) -> Result<Vec<Arc<Field>>> {
    quartic_corpus(amax, dmax).into_iter().map(quartic).collect()
}

/// Orthogonal WR ideal of norm `m^2` (or `m^2/27` when `9 | m`) for every conductor up to `max_m`.
pub fn orthogonal_square_ideals(max_m: u64) -> Result<Outcome> {
    let mut t = Tally::default();
    let conductors = enumerate_conductors(max_m);
    for &m in &conductors {
        let field = cubic(m)?;
        let case = certify::cubic_thm1(&field)?;
        let nine = m % 9 == 0;
        let norm = if nine { m * m / 27 } else { m * m };
        t.check(case.ideal.norm() == norm, || format!("m={m}: norm {} != {norm}", case.ideal.norm()));
        let Some(basis) = &case.basis else {
            t.check(false, || format!("m={m}: no orbit basis"));
            continue;
        };
        let o = field.order();
        let diag = if nine { (m * m / 9) as i128 } else { (m * m) as i128 };
        for i in 0..3 {
            for j in 0..3 {
                let g = o.bilinear(&basis[i], &basis[j]);
                let want = if i == j { diag } else { 0 };
                t.check(g == want, || format!("m={m}: gram[{i}][{j}] = {g}, want {want}"));
            }
        }
        let spanned = IdealLattice::from_z_basis(&field, basis)?;
        t.check(spanned == case.ideal, || format!("m={m}: orbit does not span the ideal"));
        let rep = wr_report(&case.ideal);
        t.check(rep.is_wr && rep.is_orthogonal, || format!("m={m}: enumeration says wr={} orth={}", rep.is_wr, rep.is_orthogonal));
        t.check(rep.minimum == format!("{diag}/1"), || format!("m={m}: minimum {} != {diag}", rep.minimum));
    }
    Ok(t.outcome(format!("{} conductors", conductors.len())))
}

/// Squarefree-norm ideals: closed-form verdict against enumeration, plus spot values.
pub fn squarefree_norm_criterion(max_m: u64) -> Result<Outcome> {
    let mut t = Tally::default();
    let mut wr = 0;
    for m in enumerate_conductors(max_m) {
        let field = cubic(m)?;
        for case in certify::cubic_cases(&field, Fault::None)? {
            if !matches!(case.kind, CubicKind::Squarefree | CubicKind::P0Alone) {
                continue;
            }
            let c = certify::crosscheck_cubic(&case);
            wr += c.enumerated as usize;
            t.check(c.pass, || c.to_string());
        }
    }
    for (m, q, want) in [(91, 7, true), (7, 7, false), (91, 91, false)] {
        let field = cubic(m)?;
        let predicted = certify::cubic_thm2_predicate(&field, q)?;
        let enumerated = wr_report(&certify::cubic_thm2_case(&field, q)?.ideal).is_wr;
        t.check(predicted == want && enumerated == want, || {
            format!("spot m={m} q={q}: predicted {predicted}, enumerated {enumerated}, want {want}")
        });
    }
    Ok(t.outcome(format!("conductors <= {max_m}, {wr} WR ideals")))
}

/// Ideals of norm `3 q^2 q'` for the given conductors and every coprime pair.
pub fn mixed_norm_criterion(conductors: &[u64]) -> Result<Outcome> {
    let mut t = Tally::default();
    let mut wr = 0;
    for &m in conductors {
        let field = cubic(m)?;
        for case in certify::cubic_cases(&field, Fault::None)? {
            if case.kind != CubicKind::Mixed {
                continue;
            }
            let c = certify::crosscheck_cubic(&case);
            wr += c.enumerated as usize;
            t.check(c.pass, || c.to_string());
        }
    }
    Ok(t.outcome(format!("m in {conductors:?}, {wr} WR pairs")))
}

/// Closed-form prime decomposition against the residue-algebra oracle.
pub fn decomposition_criterion(fields: &[Arc<Field>], prime_bound: u64) -> Result<Outcome> {
    let mut t = Tally::default();
    for field in fields {
        let disc = field.disc_abs();
        for p in primes_up_to(prime_bound) {
            let id = field.id();
            let dec = decompose_prime_quartic(field, p)?;
            let oracle = stable_subspace_primes(field, p)?;
            t.check(dec.same_primes(&oracle), || format!("{id} p={p}: {} vs oracle {}", dec.tag(), oracle.tag()));
            t.check(dec.is_consistent(), || format!("{id} p={p}: product of primes is not pO"));
            t.check(dec.shape.is_ramified() == (disc % p == 0), || format!("{id} p={p}: ramification vs disc {disc}"));
            if let Some(shape) = predicted_quartic_shape(field, p)? {
                t.check(shape == dec.shape, || format!("{id} p={p}: tag {} vs predicted {}", dec.tag(), shape.tag(4)));
            }
        }
    }
    Ok(t.outcome(format!("{} fields, p <= {prime_bound}", fields.len())))
}

/// Which rule predicts a unique prime above `p`.
fn unique_prime_verdict(field: &Arc<Field>, p: u64) -> Result<bool> {
    let q = field.as_quartic().expect("quartic field");
    let pi = p as i64;
    if q.d % pi == 0 {
        certify::quartic_pi_predicate(field, &[p])
    } else if q.a % pi == 0 {
        certify::quartic_qj_predicate(field, &[p])
    } else if p == 2 {
        certify::prime2_wr_complete(field)
    } else {
        // inert p: the prime is p O_F, a scaled copy of O_F
        certify::quartic_piqj_predicate(field, &[], &[])
    }
}

/// WR verdicts of unique primes above `p` against enumeration, with witnesses.
pub fn unique_prime_criterion(fields: &[Arc<Field>], prime_bound: u64) -> Result<Outcome> {
    let mut t = Tally::default();
    let mut unique = 0;
    for field in fields {
        let q = field.as_quartic().expect("quartic field");
        let mut primes: BTreeSet<u64> = primes_up_to(prime_bound).into_iter().collect();
        primes.extend(factorize(q.d as u64).primes());
        primes.extend(factorize(q.a.unsigned_abs()).primes());
        for p in primes {
            let Some(prime) = certify::quartic_unique_prime(field, p)? else { continue };
            unique += 1;
            let predicted = unique_prime_verdict(field, p)?;
            let enumerated = wr_report(&prime).is_wr;
            t.check(predicted == enumerated, || {
                format!("{} p={p}: predicted {predicted}, enumerated {enumerated}", field.id())
            });
        }
    }
    for (params, p, want) in [((-1, 2, 1, 5), 5, true), ((-1, 2, 3, 13), 13, false), ((3, 2, 1, 5), 3, true), ((-13, 2, 1, 5), 13, false)] {
        let field = quartic(params)?;
        let prime = certify::quartic_unique_prime(&field, p)?;
        let enumerated = prime.as_ref().map(|a| wr_report(a).is_wr);
        let predicted = unique_prime_verdict(&field, p)?;
        t.check(enumerated == Some(want) && predicted == want, || {
            format!("witness {} p={p}: predicted {predicted}, enumerated {enumerated:?}, want {want}", field.id())
        });
    }
    Ok(t.outcome(format!("{} fields, {unique} unique primes", fields.len())))
}

/// Norms of WR primitive ideals up to `bound` that do not divide the discriminant.
pub fn nondividing_wr_norms(field: &Arc<Field>, bound: u64) -> Result<BTreeMap<u64, usize>> {
    let disc = field.disc_abs();
    let mut out = BTreeMap::new();
    for ideal in enumerate_primitive_ideals(field, bound)? {
        if !disc.is_multiple_of(ideal.norm()) && wr_report(&ideal).is_wr {
            *out.entry(ideal.norm()).or_insert(0) += 1;
        }
    }
    Ok(out)
}

/// The set of WR norms not dividing the discriminant of `(1, 2, 1, 5)` up to 4000.
pub fn even_discriminant_norms() -> Result<Outcome> {
    let field = quartic((1, 2, 1, 5))?;
    let found = nondividing_wr_norms(&field, 4000)?;
    let expected: BTreeSet<u64> = [484, 2420, 3364, 3844].into();
    let norms: BTreeSet<u64> = found.keys().copied().collect();
    let missing: Vec<u64> = expected.difference(&norms).copied().collect();
    let extra: Vec<String> = norms
        .difference(&expected)
        .map(|n| format!("{n} ({} ideals)", found[n]))
        .collect();
    let detail = format!(
        "found {:?}; expected {:?}; missing {:?}; extra [{}]",
        norms,
        expected,
        missing,
        extra.join(", ")
    );
    Ok(Outcome { pass: norms == expected, detail })
}

/// Fields in the box whose prime above 2 is WR.
pub fn prime2_criterion(amax: i64, dmax: i64) -> Result<Outcome> {
    let fields = quartic_fields(amax, dmax)?;
    let mut wr_fields = Vec::new();
    let mut primes = 0;
    for field in &fields {
        let dec = decompose_prime(field, 2)?;
        for f in &dec.factors {
            primes += 1;
            if wr_report(&f.ideal).is_wr {
                wr_fields.push(format!("{} ({}, N={})", field.id(), dec.tag(), f.ideal.norm()));
            }
        }
    }
    wr_fields.dedup();
    let pass = wr_fields.len() == 1 && wr_fields[0].starts_with("quartic:1,2,1,5 ");
    let detail = format!("{} fields, {primes} primes above 2; WR at [{}]", fields.len(), wr_fields.join(", "));
    Ok(Outcome { pass, detail })
}

/// Keeps the brute-force box at most `(2r + 1)^4` points.
pub const MAX_BOX_RADIUS: i64 = 8;

/// Random positive definite Gram matrix `B^T B` with entries at most 50 in absolute value
/// and a brute-force box radius of at most [`MAX_BOX_RADIUS`].
pub fn random_gram(rng: &mut ChaCha8Rng, n: usize) -> GramForm {
    loop {
        let b: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        let g: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| b[k][i] * b[k][j]).sum()).collect())
            .collect();
        if g.iter().flatten().any(|v| v.abs() > 50) {
            continue;
        }
        match GramForm::from_i64(&g) {
            Ok(form) if naive_radius(&form) <= MAX_BOX_RADIUS => return form,
            _ => {}
        }
    }
}

/// Enumeration against a brute-force box scan on random forms.
pub fn enumerator_soundness(per_dim: usize, seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::default();
    for n in [3, 4] {
        for k in 0..per_dim {
            let g = random_gram(&mut rng, n);
            let fast = shortest_vectors(&g);
            let slow = naive_shortest(&g, naive_radius(&g));
            t.check(fast == slow, || format!("dim {n} sample {k}: min {} vs {}", fast.min, slow.min));
        }
    }
    t.outcome(format!("{per_dim} forms in each of dimensions 3 and 4"))
}

/// Determinant identity and ideal closure for every constructed ideal, and the
/// trace-sublattice boundary.
pub fn structural_invariants(cubic_bound: u64, quartic: &[Arc<Field>], prime_bound: u64) -> Result<Outcome> {
    let mut t = Tally::default();
    let check_ideal = |t: &mut Tally, a: &IdealLattice, what: &dyn Fn() -> String| {
        t.check(a.gram_determinant_matches(), || format!("{}: det Gram != N^2 |disc|", what()));
        t.check(a.validate_ideal(), || format!("{}: not an ideal", what()));
    };
    let mut cubic_fields: Vec<Arc<Field>> = enumerate_conductors(cubic_bound).into_iter().map(cubic).collect::<Result<_>>()?;
    cubic_fields.extend([819, 1197, 1953].into_iter().map(cubic).collect::<Result<Vec<_>>>()?);
    for field in &cubic_fields {
        for case in certify::cubic_cases(field, Fault::None)? {
            check_ideal(&mut t, &case.ideal, &|| format!("{} {}", field.id(), case.label()));
        }
        for p in primes_up_to(prime_bound) {
            for f in decompose_prime(field, p)?.factors {
                check_ideal(&mut t, &f.ideal, &|| format!("{} prime above {p}", field.id()));
            }
        }
    }
    for field in quartic {
        for case in certify::quartic_cases(field)? {
            check_ideal(&mut t, &case.ideal, &|| format!("{} {}", field.id(), case.label()));
        }
        for p in primes_up_to(prime_bound) {
            for f in decompose_prime(field, p)?.factors {
                check_ideal(&mut t, &f.ideal, &|| format!("{} prime above {p}", field.id()));
            }
        }
    }
    for m in [7, 91] {
        let field = cubic(m)?;
        for l in 1..=30 {
            let is_ideal = trace_sublattice(&field, l)?.validate_ideal();
            t.check(is_ideal == (m % l == 0), || format!("m={m} l={l}: ideal={is_ideal}"));
        }
    }
    Ok(t.outcome(format!("{} cubic and {} quartic fields", cubic_fields.len(), quartic.len())))
}

/// WR primitive ideals whose norm misses an odd discriminant.
pub fn conjecture_scan(fields: &[Arc<Field>], bound: u64) -> Result<Outcome> {
    let odd: Vec<String> = fields.iter().filter(|f| f.disc_abs() % 2 == 1).map(|f| f.id()).collect();
    let cfg = ScanConfig { fields: odd.join(";"), norm_bound: bound, ..ScanConfig::default() };
    let report = survey::conjecture(&cfg)?;
    let s = &report.summary;
    let mut by_field: BTreeMap<&str, Vec<&survey::WrRecord>> = BTreeMap::new();
    for r in &report.counterexamples {
        by_field.entry(r.field_id.as_str()).or_default().push(r);
    }
    let mut detail = format!(
        "{} odd-discriminant fields, bound {bound}, {} WR ideals, {} counterexamples",
        odd.len(),
        s.wr_ideals,
        s.counterexamples
    );
    for (id, recs) in &by_field {
        let norms: BTreeSet<u64> = recs.iter().map(|r| r.ideal_norm).collect();
        let shown: Vec<String> = norms.iter().take(8).map(u64::to_string).collect();
        detail += &format!("\n    {id}: {} ideals, norms {}{}", recs.len(), shown.join(","), if norms.len() > 8 { ",..." } else { "" });
        detail += &format!("\n      witness {}", recs[0]);
    }
    for (id, e) in &s.failed_fields {
        detail += &format!("\n    {id} failed: {e}");
    }
    Ok(Outcome { pass: s.counterexamples == 0 && s.failed_fields.is_empty(), detail })
}
