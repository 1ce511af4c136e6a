//! Acceptance harness: one PASS/FAIL line per criterion.
//!
//! Every check is exact. A criterion listed in [`KNOWN_FAILURES`] still
//! prints FAIL; the process exits nonzero only for a failure outside that
//! list, or when a listed criterion starts to pass.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use num_traits::{One, Zero};

use qsym::charring::{expand_in_m, expansion_violations, g_theta, is_w_invariant, LatticeCharacter};
use qsym::qsp::{all_zero, standard_battery, verify_all, CoidealPresentation, PairSpec};
use qsym::rootdata::{table, CartanType, InvolutionDatum, PairType, RestrictedData, WeightVec};
use qsym::spherical::{
    denominator_parameters, invariant_space, parameters_enter_as_laurent, support_violations, zonal,
    SphericalVector,
};
use qsym::uqrep::ModuleRep;
use qsym::{Error, Result, Scalar};

/// Criteria expected to print FAIL, with the reason.
const KNOWN_FAILURES: &[(usize, &str)] = &[(
    3,
    "AIV: the normalized spherical vectors carry monomials in d in their denominators",
)];

const DIM_BOUND: u64 = 60;

// ---------------------------------------------------------------------------
// Shared data

fn pair(ty: PairType, n: usize) -> InvolutionDatum {
    InvolutionDatum::new(ty, n, None).expect("row of the table")
}

fn census_pairs() -> Vec<InvolutionDatum> {
    vec![
        pair(PairType::Double(CartanType::A), 1),
        pair(PairType::AI, 2),
        pair(PairType::AII, 3),
        pair(PairType::AIV, 2),
        pair(PairType::CI, 2),
        pair(PairType::BII, 2),
    ]
}

fn relation_pairs() -> Vec<InvolutionDatum> {
    let mut out = census_pairs();
    if let Ok(d) = InvolutionDatum::new(PairType::CII2, 2, None) {
        out.push(d);
    }
    out
}

/// A spherical vector found by the census.
struct Found {
    pair: String,
    module: ModuleRep<Scalar>,
    xi: SphericalVector<Scalar>,
}

struct Verdict {
    pass: bool,
    detail: String,
}

impl Verdict {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Verdict { pass, detail: detail.into() }
    }
}

fn first<T: std::fmt::Display>(items: &[T]) -> String {
    match items.first() {
        Some(x) if items.len() > 1 => format!("{x} (and {} more)", items.len() - 1),
        Some(x) => x.to_string(),
        None => "none".into(),
    }
}

// ---------------------------------------------------------------------------
// Criteria

fn spherical_census(found: &mut Vec<Found>) -> Result<Verdict> {
    let mut checked = 0;
    let mut fails = Vec::new();
    for inv in census_pairs() {
        let spec = PairSpec::symbolic(&inv)?;
        let rd = RestrictedData::new(&inv)?;
        for (lambda, dim) in inv.root().dominant_weights_up_to(DIM_BOUND) {
            let m = ModuleRep::build(inv.root(), Scalar::v(), &lambda, dim as usize)?;
            let pres = CoidealPresentation::new(&spec, &m)?;
            let (kdim, xi) = invariant_space(&pres)?;
            let expected = rd.in_p_plus_theta(&lambda)?;
            checked += 1;
            if kdim != usize::from(expected) {
                fails.push(format!("{} {lambda}: kernel dimension {kdim}", inv.name()));
            }
            if let Some(xi) = xi {
                if !pres.annihilates(xi.coeffs()) || !xi.is_normalized() {
                    fails.push(format!("{} {lambda}: vector is not invariant", inv.name()));
                }
                found.push(Found { pair: inv.name(), module: m, xi });
            }
        }
    }
    Ok(Verdict::new(
        fails.is_empty(),
        format!("{checked} weights over 6 pairs, {} spherical; mismatches: {}", found.len(), first(&fails)),
    ))
}

fn support_lattice(found: &[Found]) -> Result<Verdict> {
    let mut fails = Vec::new();
    for f in found {
        let rd = RestrictedData::new(&pair_of(&f.pair))?;
        for v in support_violations(&f.xi, &f.module, &rd)? {
            fails.push(format!("{} {}: {v}", f.pair, f.module.highest()));
        }
    }
    Ok(Verdict::new(
        fails.is_empty(),
        format!("{} spherical vectors; violations: {}", found.len(), first(&fails)),
    ))
}

fn pair_of(name: &str) -> InvolutionDatum {
    census_pairs().into_iter().find(|d| d.name() == name).expect("census pair")
}

fn parameter_polynomiality(found: &[Found]) -> Result<Verdict> {
    let mut failing_pairs = BTreeSet::new();
    let mut fails = Vec::new();
    let mut laurent = true;
    for f in found {
        let params = denominator_parameters(&f.xi);
        if !params.is_empty() {
            let names: Vec<String> = params.iter().map(|s| s.name()).collect();
            failing_pairs.insert(f.pair.clone());
            fails.push(format!("{} {}: {}", f.pair, f.module.highest(), names.join(",")));
        }
        laurent &= parameters_enter_as_laurent(&f.xi);
    }
    let detail = format!(
        "{} of {} vectors have parameters in denominators (pairs: {:?}; first: {}); \
         all coefficients are Laurent in the parameters over Q(v): {laurent}",
        fails.len(),
        found.len(),
        failing_pairs,
        first(&fails),
    );
    Ok(Verdict::new(fails.is_empty(), detail))
}

fn triangularity() -> Result<Verdict> {
    let mut checked = 0;
    let mut fails = Vec::new();
    for inv in census_pairs() {
        let rd = RestrictedData::new(&inv)?;
        let left = PairSpec::symbolic(&inv)?;
        let right = PairSpec::partner_symbolic(&inv)?;
        for (lambda, dim) in rd.enumerate_p_plus_theta(DIM_BOUND) {
            let z = zonal(&lambda, &left, &right, Scalar::v(), dim as usize)?;
            let phi = &z.character;
            checked += 1;
            let tag = format!("{} {lambda}", inv.name());
            if !phi.coeff(&lambda).is_one() {
                fails.push(format!("{tag}: leading coefficient"));
            }
            if phi.support().any(|b| !rd.in_p2sigma(b)) {
                fails.push(format!("{tag}: support outside P(2 Sigma)"));
                continue;
            }
            if !is_w_invariant(phi, &rd)? {
                fails.push(format!("{tag}: not W-invariant"));
                continue;
            }
            let e = expand_in_m(phi, &rd)?;
            for v in expansion_violations(&e, &lambda, &rd)? {
                fails.push(format!("{tag}: {v}"));
            }
        }
    }
    Ok(Verdict::new(
        fails.is_empty(),
        format!("{checked} zonal functions over 6 pairs; failures: {}", first(&fails)),
    ))
}

fn relation_verifier() -> Result<Verdict> {
    let mut checked = 0;
    let mut fails = Vec::new();
    let mut names = Vec::new();
    for inv in relation_pairs() {
        let spec = PairSpec::symbolic(&inv)?;
        let battery = standard_battery(inv.root(), &Scalar::v(), 3, DIM_BOUND)?;
        if battery.len() < 3 {
            fails.push(format!("{}: battery has {} modules", inv.name(), battery.len()));
        }
        let reports = verify_all(&spec, &battery)?;
        checked += reports.len();
        fails.extend(
            reports
                .iter()
                .filter(|r| !r.zero)
                .map(|r| format!("{} ({}) i={} j={} on {}", r.pair, r.relation, r.i, r.j, r.module)),
        );
        names.push(inv.name());
    }
    // Negative control: d_1 = 3 off D.
    let inv = pair(PairType::AI, 2);
    let bad = PairSpec::symbolic(&inv)?.with_raw_d(0, Scalar::from_int(3));
    let battery = standard_battery(inv.root(), &Scalar::v(), 3, DIM_BOUND)?;
    let control_caught = !all_zero(&verify_all(&bad, &battery)?);
    if !control_caught {
        fails.push("negative control has zero residuals".into());
    }
    Ok(Verdict::new(
        fails.is_empty(),
        format!(
            "{checked} relation instances on {}; negative control nonzero: {control_caught}; failures: {}",
            names.join(", "),
            first(&fails)
        ),
    ))
}

fn coideal_tensor() -> Result<Verdict> {
    let mut checked = 0;
    let mut fails = Vec::new();
    for inv in relation_pairs() {
        let spec = PairSpec::symbolic(&inv)?;
        let rd = RestrictedData::new(&inv)?;
        let mus: Vec<WeightVec> = rd
            .enumerate_p_plus_theta(DIM_BOUND)
            .into_iter()
            .filter(|(_, d)| *d > 1)
            .map(|(w, _)| w)
            .take(2)
            .collect();
        let lambdas: Vec<WeightVec> = standard_battery(inv.root(), &Scalar::v(), 2, 12)?
            .iter()
            .map(|m| m.highest().clone())
            .collect();
        let mut pairs = 0;
        for mu in &mus {
            let mm = ModuleRep::build(inv.root(), Scalar::v(), mu, DIM_BOUND as usize)?;
            let (_, xi) = invariant_space(&CoidealPresentation::new(&spec, &mm)?)?;
            let xi = xi.ok_or_else(|| Error::TheoremViolation(format!("no spherical vector in L({mu})")))?;
            for lambda in &lambdas {
                let ml = ModuleRep::build(inv.root(), Scalar::v(), lambda, DIM_BOUND as usize)?;
                let tensor = ml.tensor(&mm)?;
                let pl = CoidealPresentation::new(&spec, &ml)?;
                let pt = CoidealPresentation::new(&spec, &tensor)?;
                for (gl, gt) in pl.generators().iter().zip(pt.generators()) {
                    assert_eq!(gl.label, gt.label);
                    for b in 0..ml.dim() {
                        let mut e = vec![Scalar::zero(); ml.dim()];
                        e[b] = Scalar::one();
                        // Unshifted generator: op + eps.
                        let mut bv = gl.op.apply(&e);
                        bv[b] += &gl.counit;
                        let rhs = kron_vec(&bv, xi.coeffs());
                        let w = kron_vec(&e, xi.coeffs());
                        let mut lhs = gt.op.apply(&w);
                        for (x, y) in lhs.iter_mut().zip(&w) {
                            *x += &(gt.counit.clone() * y);
                        }
                        if lhs != rhs {
                            fails.push(format!("{} L{lambda} (x) L{mu}: {} on basis {b}", inv.name(), gl.label));
                        }
                    }
                }
                pairs += 1;
            }
        }
        checked += pairs;
        if pairs < 2 {
            fails.push(format!("{}: only {pairs} (lambda, mu) pairs", inv.name()));
        }
    }
    Ok(Verdict::new(
        fails.is_empty(),
        format!("{checked} (lambda, mu) pairs over {} pairs; failures: {}", relation_pairs().len(), first(&fails)),
    ))
}

fn kron_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().flat_map(|x| b.iter().map(move |y| x.clone() * y)).collect()
}

fn character_action() -> Result<Verdict> {
    let inv = pair(PairType::CI, 2);
    let rd = RestrictedData::new(&inv)?;
    let left = PairSpec::symbolic(&inv)?;
    let right = PairSpec::partner_symbolic(&inv)?;
    let mut family = Vec::new();
    for (lambda, dim) in rd.enumerate_p_plus_theta(100) {
        let z = zonal(&lambda, &left, &right, Scalar::v(), dim as usize)?;
        family.push((lambda, z.character));
    }
    let group: Vec<LatticeCharacter<Scalar>> = g_theta(&rd)?;
    let mut fails = Vec::new();
    let nontrivial: Vec<_> = group.iter().filter(|g| g.values().iter().any(|x| !x.is_one())).collect();
    if nontrivial.len() != 1 {
        fails.push(format!("G_theta has {} nontrivial elements", nontrivial.len()));
    }
    for g in &nontrivial {
        for (lambda, phi) in &family {
            if !is_w_invariant(&g.act_on_family_member(lambda, phi, &rd)?, &rd)? {
                fails.push(format!("g maps the member {lambda} out of the invariants"));
            }
        }
    }
    // g(2 alpha~_2) = 4.
    let bad = LatticeCharacter::new(vec![Scalar::one(), Scalar::from_int(2)])?;
    if bad.in_g_theta(&rd)? {
        fails.push("the control character lies in G_theta".into());
    }
    let is_regular = |l: &WeightVec| (0..rd.rank()).all(|i| &rd.reflect(i, l) != l);
    let mut broken = Vec::new();
    for (lambda, phi) in &family {
        if !is_w_invariant(&bad.act_on_family_member(lambda, phi, &rd)?, &rd)? {
            broken.push(lambda.clone());
        }
    }
    let regular_broken = broken.iter().any(is_regular);
    if !regular_broken {
        fails.push("no regular member loses invariance under the control character".into());
    }
    let regular = family.iter().filter(|(l, _)| is_regular(l)).count();
    Ok(Verdict::new(
        fails.is_empty(),
        format!(
            "{} members ({regular} regular), |G_theta| = {}; control breaks {} members (regular: {regular_broken}); failures: {}",
            family.len(),
            group.len(),
            broken.len(),
            first(&fails)
        ),
    ))
}

fn root_data_sanity() -> Result<Verdict> {
    let rows = table(8, 4);
    let mut fails = Vec::new();
    let mut exceptional = 0;
    for row in &rows {
        if row.pair().fixed_rank().is_some() {
            exceptional += 1;
        }
        for v in row.validate() {
            fails.push(format!("{}: {v}", row.name()));
        }
        if row.computed_s() != row.s_set() || row.computed_d() != row.d_set() {
            fails.push(format!("{}: S or D differs from the recomputation", row.name()));
        }
        let rd = RestrictedData::new(row)?;
        for v in rd.validate() {
            fails.push(format!("{}: {v}", row.name()));
        }
        if !rd.lemma_half_root_integrality() {
            fails.push(format!("{}: half-root integrality", row.name()));
        }
    }
    Ok(Verdict::new(
        fails.is_empty(),
        format!("{} rows ({exceptional} exceptional); failures: {}", rows.len(), first(&fails)),
    ))
}

// ---------------------------------------------------------------------------
// Driver

fn main() -> ExitCode {
    let mut found = Vec::new();
    let mut unexpected = false;
    let mut report = |id: usize, name: &str, run: &mut dyn FnMut() -> Result<Verdict>| {
        let start = Instant::now();
        let verdict = run().unwrap_or_else(|e| Verdict::new(false, format!("error: {e}")));
        let known = KNOWN_FAILURES.iter().find(|(k, _)| *k == id);
        let status = if verdict.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {id} {status} {name} [{:.1}s]: {}",
            start.elapsed().as_secs_f64(),
            verdict.detail
        );
        match (verdict.pass, known) {
            (false, Some((_, why))) => println!("  known failure: {why}"),
            (false, None) => unexpected = true,
            (true, Some(_)) => {
                println!("  listed as a known failure but passed");
                unexpected = true;
            }
            (true, None) => {}
        }
    };
    report(1, "spherical census", &mut || spherical_census(&mut found));
    report(2, "support lattice", &mut || support_lattice(&found));
    report(3, "parameter polynomiality", &mut || parameter_polynomiality(&found));
    report(4, "triangularity and range", &mut triangularity);
    report(5, "relation verifier", &mut relation_verifier);
    report(6, "coideal tensor property", &mut coideal_tensor);
    report(7, "character action", &mut character_action);
    report(8, "root-data sanity", &mut root_data_sanity);
    if unexpected {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}

