//! Exhaustive verification suites behind `grothlab verify`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use grothlab::algebra::{Monomial, Polynomial};
use grothlab::insertion::{phi, phi_inverse, phi_unsigned, psi, psi_inverse};
use grothlab::partitions::{verify_hmult_lemma, Partition, StrictPartition};
use grothlab::polynomials::{
    expand_in_pschur, expand_in_schur, expansion_via_maximal, expansion_via_restricted,
    grothendieck_j_algebraic, grothendieck_j_combinatorial, grothendieck_p_algebraic,
    grothendieck_p_combinatorial, pschur, schur, specialize_t, Family, FamilySpec,
};
use grothlab::tableaux::{
    enumerate_maximal_mt, enumerate_maximal_smt, enumerate_mt, enumerate_rt, enumerate_smt,
    enumerate_srt, enumerate_sst, enumerate_ssyt, maximal_mt_to_rt, maximal_smt_to_srt,
    rt_to_maximal_mt, srt_to_maximal_smt, Entry, MultisetTableau, ShiftedMultisetTableau,
    SkewFilling,
};

/// Census size, read from `GROTHLAB_CENSUS_SCALE`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    Small,
    Full,
}

impl Scale {
    /// `small` or `full`; anything else (or unset) is `full`.
    pub fn from_env() -> Scale {
        match std::env::var("GROTHLAB_CENSUS_SCALE").as_deref() {
            Ok("small") => Scale::Small,
            _ => Scale::Full,
        }
    }
}

impl fmt::Display for Scale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scale::Small => "small",
            Scale::Full => "full",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Lemma,
    Psi,
    Phi,
    Maximal,
    Positivity,
    Routes,
    Specialization,
    Signed,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Routes,
        Suite::Lemma,
        Suite::Psi,
        Suite::Phi,
        Suite::Maximal,
        Suite::Positivity,
        Suite::Specialization,
        Suite::Signed,
    ];
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "lemma" => Suite::Lemma,
            "psi" => Suite::Psi,
            "phi" => Suite::Phi,
            "maximal" => Suite::Maximal,
            "positivity" => Suite::Positivity,
            "routes" => Suite::Routes,
            "specialization" => Suite::Specialization,
            "signed" => Suite::Signed,
            "all" => Suite::All,
            _ => {
                return Err(format!(
                    "unknown suite {:?} (expected lemma, psi, phi, maximal, positivity, routes, \
                     specialization, signed or all)",
                    s
                ))
            }
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Lemma => "lemma",
            Suite::Psi => "psi",
            Suite::Phi => "phi",
            Suite::Maximal => "maximal",
            Suite::Positivity => "positivity",
            Suite::Routes => "routes",
            Suite::Specialization => "specialization",
            Suite::Signed => "signed",
            Suite::All => "all",
        })
    }
}

/// Case count and the description of every failing case.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl Report {
    fn new(name: &str) -> Self {
        Report {
            name: name.to_string(),
            ..Default::default()
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "{} {}: {}/{} cases pass",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.cases - self.failures.len(),
            self.cases
        )
    }
}

pub fn run(suite: Suite, scale: Scale) -> Vec<Report> {
    match suite {
        Suite::Lemma => vec![lemma(scale)],
        Suite::Psi => vec![psi_suite(scale)],
        Suite::Phi => vec![phi_suite(scale)],
        Suite::Maximal => vec![maximal(scale)],
        Suite::Positivity => vec![positivity(scale)],
        Suite::Routes => vec![routes(scale)],
        Suite::Specialization => vec![specialization(scale)],
        Suite::Signed => vec![signed_factor(scale)],
        Suite::All => Suite::EACH.iter().flat_map(|&s| run(s, scale)).collect(),
    }
}

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).expect("literal partition")
}

fn sp(v: &[u32]) -> StrictPartition {
    StrictPartition::new(v.to_vec()).expect("literal strict partition")
}

/// One instance of the route census: a family, a shape, `n` and a t-cap.
#[derive(Debug, Clone)]
pub struct Instance {
    pub spec: FamilySpec,
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.spec;
        write!(f, "{} {} n={} tcap={}", s.family, s.mu, s.n, s.t_cap)
    }
}

/// Every nonempty `μ ⊆ (3,2,1)` (strict only for family P), `n <= 3`,
/// `t_cap <= 2`. Shapes with more than `n` parts have no polynomial in `n`
/// variables and are skipped.
pub fn route_instances(scale: Scale) -> Vec<Instance> {
    let (max_n, max_t) = match scale {
        Scale::Small => (2, 1),
        Scale::Full => (3, 2),
    };
    let shapes: Vec<Partition> = p(&[3, 2, 1])
        .subpartitions()
        .into_iter()
        .filter(|mu| !mu.is_empty())
        .collect();
    let mut out = Vec::new();
    for family in [Family::J, Family::P] {
        for mu in &shapes {
            if family == Family::P && !mu.is_strict() {
                continue;
            }
            for n in 1..=max_n {
                if mu.len() > n {
                    continue;
                }
                for t_cap in 0..=max_t {
                    let spec = FamilySpec::new(family, mu.clone(), n, t_cap, None)
                        .expect("census instances are valid");
                    out.push(Instance { spec });
                }
            }
        }
    }
    out
}

fn algebraic(spec: &FamilySpec) -> Result<Polynomial, String> {
    let f = match spec.family {
        Family::J => grothendieck_j_algebraic(spec),
        _ => grothendieck_p_algebraic(spec),
    };
    f.map(|s| s.into_poly()).map_err(|e| e.to_string())
}

fn combinatorial(spec: &FamilySpec) -> Result<Polynomial, String> {
    let f = match spec.family {
        Family::J => grothendieck_j_combinatorial(spec),
        _ => grothendieck_p_combinatorial(spec),
    };
    f.map(|s| s.into_poly()).map_err(|e| e.to_string())
}

/// Algebraic and combinatorial definitions agree term for term.
pub fn routes(scale: Scale) -> Report {
    let mut r = Report::new("routes");
    for inst in route_instances(scale) {
        let (a, c) = (algebraic(&inst.spec), combinatorial(&inst.spec));
        let ok = matches!((&a, &c), (Ok(a), Ok(c)) if a == c);
        r.check(ok, || {
            format!("{}: algebraic and combinatorial differ", inst)
        });
    }
    r
}

/// Basis expansions are t-positive and equal the maximal-tableau and
/// restricted-tableau expansions.
pub fn positivity(scale: Scale) -> Report {
    let mut r = Report::new("positivity");
    for inst in route_instances(scale) {
        let spec = &inst.spec;
        let outcome = algebraic(spec).and_then(|f| {
            let e = match spec.family {
                Family::J => expand_in_schur(&f),
                _ => expand_in_pschur(&f),
            }
            .map_err(|e| e.to_string())?;
            let max = expansion_via_maximal(spec).map_err(|e| e.to_string())?;
            let res = expansion_via_restricted(spec).map_err(|e| e.to_string())?;
            Ok((e.is_positive(), e == max, e == res))
        });
        match outcome {
            Ok((pos, max, res)) => {
                r.check(pos, || format!("{}: negative coefficient", inst));
                r.check(max, || {
                    format!("{}: maximal-tableau expansion differs", inst)
                });
                r.check(res, || {
                    format!("{}: restricted-tableau expansion differs", inst)
                });
            }
            Err(e) => r.check(false, || format!("{}: {}", inst, e)),
        }
    }
    r
}

/// Setting every `t_j = 0` recovers `s_μ` (family J) or `P_μ` (family P).
pub fn specialization(scale: Scale) -> Report {
    let mut r = Report::new("specialization");
    for inst in route_instances(scale) {
        let spec = &inst.spec;
        let expected = match spec.family {
            Family::J => schur(&spec.mu, spec.n),
            _ => pschur(&spec.strict_mu().expect("strict"), spec.n),
        };
        let f = match spec.family {
            Family::J => grothendieck_j_algebraic(spec),
            _ => grothendieck_p_algebraic(spec),
        };
        let got = f.and_then(|f| specialize_t(&f, &vec![false; spec.ell()]));
        r.check(got.as_ref() == Ok(&expected), || {
            format!("{}: t=0 is not the basis element", inst)
        });
    }
    r
}

/// Bounds for the lemma census: `(max part of μ, max ΣT)`.
fn lemma_bounds(scale: Scale) -> (u32, u32) {
    match scale {
        Scale::Small => (3, 2),
        Scale::Full => (4, 3),
    }
}

/// Strictly decreasing vectors of length `n` with entries `<= max_part`
/// (trailing zeros allowed once).
fn distinct_padded(n: usize, max_part: u32) -> Vec<Vec<u32>> {
    fn go(prefix: &mut Vec<u32>, n: usize, below: u32, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let remaining = (n - prefix.len()) as u32;
        for v in (0..below).rev() {
            if v + 1 < remaining {
                break;
            }
            prefix.push(v);
            go(prefix, n, v, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, max_part + 1, &mut out);
    out
}

/// Compositions of length `len` with sum at most `max_sum`.
fn bounded_lists(len: usize, max_sum: u32) -> Vec<Vec<u32>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..=max_sum {
        for mut rest in bounded_lists(len - 1, max_sum - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Weakly increasing lists of length `len` with entries in `1..=n`.
fn column_lists(len: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, len: usize, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        let from = prefix.last().copied().unwrap_or(1);
        for c in from..=n {
            prefix.push(c);
            go(prefix, len, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), len, n, &mut out);
    out
}

/// The h-multiplication lemma over every distinct padded `μ`, increment
/// list `T` and column bound list `c`.
pub fn lemma(scale: Scale) -> Report {
    let (max_part, max_sum) = lemma_bounds(scale);
    let mut r = Report::new("lemma");
    for n in 1..=3 {
        for mu in distinct_padded(n, max_part) {
            for len in 1..=3 {
                for incs in bounded_lists(len, max_sum) {
                    for cols in column_lists(len, n) {
                        let ok = verify_hmult_lemma(&mu, &incs, &cols, n)
                            .map(|rep| rep.holds())
                            .unwrap_or(false);
                        r.check(ok, || {
                            format!("mu={:?} T={:?} c={:?} n={}", mu, incs, cols, n)
                        });
                    }
                }
            }
        }
    }
    r
}

/// `(shape, value cap, extra-entry cap)` for the bijection censuses.
fn bijection_shapes(scale: Scale) -> Vec<(Vec<u32>, u32, u32)> {
    match scale {
        Scale::Small => vec![(vec![2, 1], 3, 1)],
        Scale::Full => vec![(vec![2, 1], 3, 2), (vec![3, 1], 3, 2)],
    }
}

fn highest_weight<T: PartialEq>(rows: &[Vec<Vec<T>>], letter: impl Fn(u32) -> T) -> bool {
    rows.iter().enumerate().all(|(i, row)| {
        row.iter()
            .all(|b| b.len() == 1 && b[0] == letter(i as u32 + 1))
    })
}

fn psi_census(r: &mut Report, mu: &Partition, n: u32, extra: u32) {
    let ell = mu.largest() as usize;
    let mut image = BTreeSet::new();
    for t in enumerate_mt(mu, n, extra) {
        let label = || format!("Psi {} on\n{}", mu, t.to_text());
        match psi(&t) {
            Ok((q, rt)) => {
                r.check(q.is_ssyt() && rt.is_restricted(mu), || {
                    format!("{}: bad image", label())
                });
                r.check(
                    q.weight() == t.weight() && rt.weight(ell) == t.column_weight(),
                    || format!("{}: weights not preserved", label()),
                );
                r.check(psi_inverse(&q, &rt).as_ref() == Ok(&t), || {
                    format!("{}: no round trip", label())
                });
                r.check(highest_weight(q.rows(), |v| v) == t.is_maximal(), || {
                    format!("{}: maximality not detected", label())
                });
                image.insert(format!("{}/{:?}", q.to_text(), rt));
            }
            Err(e) => r.check(false, || format!("{}: {}", label(), e)),
        }
    }
    let mut pairs = BTreeSet::new();
    for rt in enumerate_rt(mu, extra) {
        for q in enumerate_ssyt(rt.outer(), n) {
            pairs.insert(format!("{}/{:?}", q.to_text(), rt));
        }
    }
    r.check(image == pairs, || {
        format!("Psi {}: image is not SSYT x RT", mu)
    });
}

pub fn psi_suite(scale: Scale) -> Report {
    let mut r = Report::new("psi");
    for (mu, n, extra) in bijection_shapes(scale) {
        psi_census(&mut r, &p(&mu), n, extra);
    }
    r
}

fn phi_census(r: &mut Report, mu: &StrictPartition, n: u32, extra: u32, signed: bool) {
    let ell = mu.largest() as usize;
    let mut image = BTreeSet::new();
    for t in enumerate_smt(mu, n, extra, signed) {
        let label = || {
            format!(
                "Phi {} signed={} on\n{}",
                mu.as_partition(),
                signed,
                t.to_text()
            )
        };
        let mapped = if signed { phi(&t) } else { phi_unsigned(&t) };
        match mapped {
            Ok((q, rt)) => {
                r.check(q.is_semistandard() && rt.is_shifted_restricted(mu), || {
                    format!("{}: bad image", label())
                });
                r.check(
                    q.weight() == t.weight() && rt.weight(ell) == t.diagonal_weight(),
                    || format!("{}: weights not preserved", label()),
                );
                r.check(phi_inverse(&q, &rt).as_ref() == Ok(&t), || {
                    format!("{}: no round trip", label())
                });
                if !signed {
                    r.check(
                        highest_weight(q.rows(), Entry::unprimed) == t.is_maximal(),
                        || format!("{}: maximality not detected", label()),
                    );
                }
                image.insert(format!("{}/{:?}", q.to_text(), rt));
            }
            Err(e) => r.check(false, || format!("{}: {}", label(), e)),
        }
    }
    let mut pairs = BTreeSet::new();
    for rt in enumerate_srt(mu, extra) {
        let Some(lambda) = rt.shifted_outer(mu.len()) else {
            r.check(false, || {
                format!("Phi {}: bad restricted filling {:?}", mu.as_partition(), rt)
            });
            continue;
        };
        for q in enumerate_sst(&lambda, n, signed) {
            pairs.insert(format!("{}/{:?}", q.to_text(), rt));
        }
    }
    r.check(image == pairs, || {
        format!(
            "Phi {} signed={}: image is not SST x SRT",
            mu.as_partition(),
            signed
        )
    });
}

pub fn phi_suite(scale: Scale) -> Report {
    let mut r = Report::new("phi");
    for (mu, n, extra) in bijection_shapes(scale) {
        for signed in [true, false] {
            phi_census(&mut r, &sp(&mu), n, extra, signed);
        }
    }
    r
}

/// The maximal tableau drawn for the unshifted maximal example, and the
/// restricted tableau it corresponds to.
pub fn unshifted_example_pair() -> (MultisetTableau, SkewFilling) {
    let t = MultisetTableau::from_text("1|1 1|1 1|1 1\n2 2|2|2 2 2\n3|3 3 3|3\n4 4|4 4\n")
        .expect("valid example");
    let r = SkewFilling::new(
        p(&[7, 6, 5, 4]),
        p(&[4, 3, 3, 2]),
        vec![vec![1, 2, 3], vec![2, 2, 4], vec![3, 3], vec![3, 4]],
    )
    .expect("valid example");
    (t, r)
}

/// The shifted counterpart of [`unshifted_example_pair`].
pub fn shifted_example_pair() -> (ShiftedMultisetTableau, SkewFilling) {
    let t = ShiftedMultisetTableau::from_text(
        "1|1|1 1|1|1 1|1 1|1\n.2|2 2|2|2|2 2 2\n..3 3|3|3|3 3\n...4 4|4 4\n",
        false,
    )
    .expect("valid example");
    let r = SkewFilling::new(
        p(&[7, 6, 5, 4]),
        p(&[4, 3, 3, 2]),
        vec![vec![2, 3, 5], vec![3, 3, 6], vec![4, 7], vec![6, 7]],
    )
    .expect("valid example");
    (t, r)
}

/// Maximal tableaux and restricted tableaux correspond, on the censuses and
/// on the two drawn examples.
pub fn maximal(scale: Scale) -> Report {
    let mut r = Report::new("maximal");
    for (shape, _, extra) in bijection_shapes(scale) {
        let mu = p(&shape);
        let ell = mu.largest() as usize;
        let maximal = enumerate_maximal_mt(&mu, extra);
        for t in &maximal {
            let ok = maximal_mt_to_rt(t).and_then(|rt| {
                let back = rt_to_maximal_mt(&rt, &mu)?;
                Ok(back == *t
                    && rt.weight(ell) == t.column_weight()
                    && rt.outer().parts() == t.weight())
            });
            r.check(ok == Ok(true), || {
                format!("maximal MT round trip on\n{}", t.to_text())
            });
        }
        r.check(enumerate_rt(&mu, extra).len() == maximal.len(), || {
            format!("{}: |RT| differs from the number of maximal tableaux", mu)
        });

        let smu = sp(&shape);
        let maximal = enumerate_maximal_smt(&smu, extra);
        for t in &maximal {
            let ok = maximal_smt_to_srt(t).and_then(|rt| {
                let back = srt_to_maximal_smt(&rt, &smu)?;
                Ok(back == *t && rt.weight(ell) == t.diagonal_weight())
            });
            r.check(ok == Ok(true), || {
                format!("maximal SMT round trip on\n{}", t.to_text())
            });
        }
        r.check(enumerate_srt(&smu, extra).len() == maximal.len(), || {
            format!(
                "{}: |SRT| differs from the number of maximal shifted tableaux",
                mu
            )
        });
    }

    let (t, rt) = unshifted_example_pair();
    r.check(maximal_mt_to_rt(&t).as_ref() == Ok(&rt), || {
        "unshifted example: maximal to restricted".into()
    });
    r.check(rt_to_maximal_mt(&rt, &t.shape()).as_ref() == Ok(&t), || {
        "unshifted example: restricted to maximal".into()
    });
    let (t, rt) = shifted_example_pair();
    r.check(maximal_smt_to_srt(&t).as_ref() == Ok(&rt), || {
        "shifted example: maximal to restricted".into()
    });
    r.check(
        srt_to_maximal_smt(&rt, &sp(&[7, 5, 4, 2])).as_ref() == Ok(&t),
        || "shifted example: restricted to maximal".into(),
    );
    r
}

fn smt_generating_sum(mu: &StrictPartition, n: u32, extra: u32, signed: bool) -> Polynomial {
    let nt = mu.largest() as usize;
    let mut terms = Vec::new();
    for t in enumerate_smt(mu, n, extra, signed) {
        let mut x = t.weight();
        x.resize(n as usize, 0);
        terms.push((Monomial::new(x, t.diagonal_weight()), BigInt::one()));
    }
    Polynomial::from_terms(n as usize, nt, terms).expect("consistent arity")
}

/// The signed generating sum is `2^m` times the unsigned one.
pub fn signed_factor(scale: Scale) -> Report {
    let mut r = Report::new("signed");
    for (shape, n, extra) in bijection_shapes(scale) {
        let mu = sp(&shape);
        let signed = smt_generating_sum(&mu, n, extra, true);
        let unsigned = smt_generating_sum(&mu, n, extra, false);
        let factor = BigInt::one() << mu.len();
        r.check(signed == unsigned.scalar_mul(&factor), || {
            format!(
                "{}: signed sum is not 2^{} times the unsigned sum",
                mu.as_partition(),
                mu.len()
            )
        });
    }
    r
}
