use crate::config::{spin_label, ConfigError, SuiteConfig};
use crate::dsl::{parse, EvalError, Evaluator, Expr, ParseError};
use crate::report::{Check, Report};
use qsusy_core::hopf::SemiHopfClass;
use qsusy_core::superspace::calculus::{d, dbar, expand_superfield, expected_field_strength, field_strength_superfield};
use qsusy_core::superspace::{verify_sym_abelian, verify_wz_lagrangian, Coeff, LagrangianParams, SuperfieldKind};
use qsusy_core::susy::{bracket_adjoint_consistency, jacobi_sweep, realize};
use qsusy_core::uq::{
    braided_jacobi, casimir_form_compare, check_intertwining, check_u_conjugation, check_yang_baxter, coproduct_shape,
    hecke_pattern, noncomm_factor, quantum_lie_basis, quantum_trace_element, r_matrix,
};
use qsusy_core::{AlgebraElement, BasisSymbol, BracketTable, Generator, Matrix, QuantumMetric, Rep, Scalar, StructureMaps};
use serde_json::{json, Value};
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Hopf,
    Semihopf,
    Jacobi,
    Uq,
    Superspace,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Hopf => "hopf",
            Suite::Semihopf => "semihopf",
            Suite::Jacobi => "jacobi",
            Suite::Uq => "uq",
            Suite::Superspace => "superspace",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum UqView {
    Rep,
    Rmatrix,
    Metric,
    Qlie,
    Casimir,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum FieldView {
    Chiral,
    Antichiral,
    Vector,
}

enum Outcome {
    Gated(bool, Option<String>, Value),
    Info(Option<String>, Value),
}

struct Runner {
    report: Report,
}

impl Runner {
    fn new(name: &str, cfg: &SuiteConfig) -> Self {
        Runner { report: Report::new(name, serde_json::to_value(cfg).expect("config serialises")) }
    }

    fn run(&mut self, id: impl Into<String>, f: impl FnOnce() -> qsusy_core::Result<Outcome>) {
        let id = id.into();
        let start = Instant::now();
        let mut check = match f() {
            Ok(Outcome::Gated(passed, witness, details)) => Check::gated(id, passed, witness, details),
            Ok(Outcome::Info(witness, details)) => Check::report_only(id, witness, details),
            Err(e) => Check::gated(id, false, Some(format!("error: {e}")), Value::Null),
        };
        check.duration_us = Some(start.elapsed().as_micros() as u64);
        self.report.checks.push(check);
    }

    fn finish(mut self) -> Report {
        self.report.finish();
        self.report
    }
}

fn rendered(m: &Matrix) -> Value {
    json!(m.to_rows().iter().map(|r| r.iter().map(Scalar::to_string).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn coeff_text(c: &Option<Coeff>) -> Value {
    c.as_ref().map_or(Value::Null, |c| json!(c.to_string()))
}

/// Runs a suite. Configuration problems are reported before any check runs.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<Report, ConfigError> {
    cfg.validate()?;
    let maps = StructureMaps::new(cfg.algebra())?;
    let mut r = Runner::new(suite.name(), cfg);
    let all = suite == Suite::All;
    if all || suite == Suite::Hopf {
        hopf_checks(&mut r, &maps, cfg);
    }
    if all || suite == Suite::Semihopf {
        semihopf_checks(&mut r, &maps, cfg);
    }
    if all || suite == Suite::Jacobi {
        jacobi_checks(&mut r, &maps, cfg);
    }
    if all || suite == Suite::Uq {
        uq_checks(&mut r, &maps, cfg);
    }
    if all || suite == Suite::Superspace {
        superspace_checks(&mut r, cfg);
    }
    Ok(r.finish())
}

fn elements_under_test(cfg: &SuiteConfig) -> Vec<(String, AlgebraElement, bool)> {
    let mut out: Vec<_> = Generator::all(cfg.n_susy)
        .into_iter()
        .map(|g| (g.to_string(), AlgebraElement::generator(g), g.is_odd()))
        .collect();
    out.push(("Id".into(), AlgebraElement::one(), false));
    out
}

fn hopf_checks(r: &mut Runner, maps: &StructureMaps, cfg: &SuiteConfig) {
    for (name, a, _) in elements_under_test(cfg) {
        r.run(format!("hopf.bialgebra.{name}"), || {
            let b = maps.check_bialgebra_axioms(&a)?;
            Ok(Outcome::Gated(b.passed(), b.witness.clone(), json!(b)))
        });
    }
    r.run("hopf.relations-respected", || {
        let failures = maps.check_relations_respected()?;
        let witness = failures.first().map(|(rule, defect)| format!("Delta({rule}) defect {defect}"));
        Ok(Outcome::Gated(failures.is_empty(), witness, json!({ "rules": maps.rs().rules().len(), "failures": failures })))
    });
}

fn semihopf_checks(r: &mut Runner, maps: &StructureMaps, cfg: &SuiteConfig) {
    let elements = elements_under_test(cfg);
    let mut classes = Vec::new();
    for (name, a, odd) in &elements {
        let expected = if *odd { SemiHopfClass::OddType } else { SemiHopfClass::EvenType };
        r.run(format!("semihopf.class.{name}"), || {
            let rep = maps.check_semi_hopf(a)?;
            classes.push((name.clone(), rep.classification, rep.degenerate()));
            let witness = format!("classified {:?}, expected {:?}", rep.classification, expected);
            let mut details = json!(rep);
            details["expected"] = json!(expected);
            details["degenerate"] = json!(rep.degenerate());
            Ok(Outcome::Gated(rep.classification == expected, Some(witness), details))
        });
    }
    r.run("semihopf.partition", || {
        let pick = |c: SemiHopfClass| classes.iter().filter(|x| x.1 == c).map(|x| x.0.clone()).collect::<Vec<_>>();
        let (odd, even, neither) = (pick(SemiHopfClass::OddType), pick(SemiHopfClass::EvenType), pick(SemiHopfClass::Neither));
        let degenerate: Vec<_> = classes.iter().filter(|x| x.2).map(|x| x.0.clone()).collect();
        let expected_odd: Vec<_> = elements.iter().filter(|e| e.2).map(|e| e.0.clone()).collect();
        let complete = classes.len() == elements.len();
        let passed = complete && neither.is_empty() && odd == expected_odd && odd.len() + even.len() == elements.len();
        let witness = format!("odd {odd:?}, neither {neither:?}");
        Ok(Outcome::Gated(passed, Some(witness), json!({ "odd_type": odd, "even_type": even, "neither": neither, "degenerate": degenerate })))
    });

    let table = maps.rs().table().clone();
    let symbols = BasisSymbol::classical(cfg.n_susy);
    for (label, want) in [("odd-odd", (true, true)), ("odd-even", (true, false)), ("even-even", (false, false))] {
        r.run(format!("semihopf.adjoint-bracket.{label}"), || {
            let mut pairs = 0;
            let mut failures = Vec::new();
            for &x in &symbols {
                for &y in &symbols {
                    let (ox, oy) = (x.parity() < 0, y.parity() < 0);
                    if (ox, oy) != want && (oy, ox) != want {
                        continue;
                    }
                    pairs += 1;
                    let o = bracket_adjoint_consistency(maps, &table, None, x, y)?;
                    let (rx, ry) = (realize(x, None)?, realize(y, None)?);
                    let sign = if ox && oy { 1 } else { -1 };
                    let word = maps.rs().multiply(&rx, &ry)?.add(&maps.rs().multiply(&ry, &rx)?.scale(&Scalar::from_i64(sign)));
                    if !o.passed() || o.adjoint != word {
                        failures.push(format!("({x}, {y}): ad = {}, word = {word}, bracket = {}", o.adjoint, o.bracket));
                    }
                }
            }
            let form = if want == (true, true) { "anticommutator" } else { "commutator" };
            let details = json!({ "pairs": pairs, "form": form, "failures": failures.len() });
            Ok(Outcome::Gated(failures.is_empty(), failures.first().cloned(), details))
        });
    }
}

fn jacobi_checks(r: &mut Runner, maps: &StructureMaps, cfg: &SuiteConfig) {
    r.run("jacobi.classical-sweep", || {
        let sweep = jacobi_sweep(&BracketTable::new(cfg.n_susy)?);
        let witness = sweep.failures.first().map(|f| {
            let (x, y, z) = f.triple;
            format!("{:?} identity on ({x}, {y}, {z}): defect {}", f.side, f.witness.as_ref().map(|w| w.to_string()).unwrap_or_default())
        });
        let details = json!({
            "n_susy": cfg.n_susy,
            "symbols": BasisSymbol::classical(cfg.n_susy).len(),
            "triples": sweep.triples,
            "checks": sweep.checks,
            "failures": sweep.failures.len(),
        });
        Ok(Outcome::Gated(sweep.failures.is_empty(), witness, details))
    });
    r.run("jacobi.quantum-candidate-gamma", || {
        let basis = quantum_lie_basis(maps, cfg.max_degree)?;
        let sigma = noncomm_factor(&basis.adjoint, &basis.adjoint)?;
        let holds = braided_jacobi(&basis, &sigma)?;
        let witness = (!holds).then(|| "the candidate braided antisymmetriser does not satisfy the Jacobi identity".to_string());
        Ok(Outcome::Info(witness, json!({ "holds": holds })))
    });
}

struct Metrics {
    fundamental: QuantumMetric,
    adjoint: QuantumMetric,
    lambda_ad: Matrix,
}

fn uq_checks(r: &mut Runner, maps: &StructureMaps, cfg: &SuiteConfig) {
    let acfg = cfg.algebra();
    let symbolic = cfg.q_value.is_none();
    let mut reps = Vec::new();
    for &two_j in &cfg.two_j {
        let j = spin_label(two_j);
        r.run(format!("uq.rep.relations.spin-{j}"), || {
            let rep = Rep::spin(two_j, &acfg)?;
            let failures = rep.relation_failures()?;
            let details = json!({ "dimension": rep.dim(), "failures": failures });
            reps.push(rep);
            Ok(Outcome::Gated(failures.is_empty(), failures.first().cloned(), details))
        });
    }
    let mut pairs: Vec<(usize, usize)> = (0..reps.len()).map(|k| (k, k)).collect();
    pairs.extend((1..reps.len()).map(|k| (k - 1, k)));
    for (a, b) in pairs {
        let (ra, rb) = (&reps[a], &reps[b]);
        r.run(format!("uq.rmatrix.intertwining.{}x{}", spin_label(ra.two_j()), spin_label(rb.two_j())), || {
            let rm = r_matrix(ra, rb)?;
            let outcomes = check_intertwining(maps, ra, rb, &rm)?;
            let failed: Vec<_> = outcomes.iter().filter(|o| !o.passed()).map(|o| o.generator.clone()).collect();
            let witness = failed.first().map(|g| format!("R Delta({g}) != Delta^op({g}) R"));
            Ok(Outcome::Gated(failed.is_empty(), witness, json!({ "generators": outcomes.len(), "failed": failed })))
        });
    }
    for rep in &reps {
        let j = spin_label(rep.two_j());
        r.run(format!("uq.ybe.spin-{j}"), || {
            let diff = check_yang_baxter(rep)?;
            let witness = diff.as_ref().map(|d| format!("R12 R13 R23 - R23 R13 R12 = {d}"));
            Ok(Outcome::Gated(diff.is_none(), witness, json!({ "dimension": rep.dim().pow(3) })))
        });
    }
    if let Some(half) = reps.iter().find(|r| r.two_j() == 1) {
        r.run("uq.hecke.spin-1/2", || {
            let lambda = noncomm_factor(half, half)?;
            let pattern = hecke_pattern(&lambda, half.q_r())?;
            let details = json!({ "roots": pattern.as_ref().map(|(a, b)| [a.to_string(), b.to_string()]) });
            Ok(Outcome::Gated(pattern.is_some(), Some("lambda satisfies no quadratic relation".into()), details))
        });
    }

    let basis = match quantum_lie_basis(maps, cfg.max_degree) {
        Ok(b) => Some(b),
        Err(e) => {
            r.run("uq.qlie.basis", || Err(e));
            None
        }
    };
    let Some(basis) = basis else { return };
    r.run("uq.qlie.basis", || {
        let failures = basis.adjoint.relation_failures()?;
        let details = json!({
            "degree": basis.degree,
            "elements": basis.elements.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
            "adjoint_relation_failures": failures,
        });
        Ok(Outcome::Gated(basis.elements.len() == 3 && failures.is_empty(), failures.first().cloned(), details))
    });
    r.run("uq.qlie.adjoint-consistency", || {
        let table = BracketTable::new(cfg.n_susy)?.with_quantum(basis.f.clone());
        let mut failures = Vec::new();
        for x in 1..=3 {
            for y in 1..=3 {
                let o = bracket_adjoint_consistency(maps, &table, Some(&basis.elements), BasisSymbol::T(x), BasisSymbol::T(y))?;
                if let Some(w) = o.witness() {
                    failures.push(format!("(T[{x}], T[{y}]): {w}"));
                }
            }
        }
        Ok(Outcome::Gated(failures.is_empty(), failures.first().cloned(), json!({ "pairs": 9, "failures": failures.len() })))
    });

    let spin_half = Rep::spin(1, &acfg);
    for (label, rep) in [("spin-1/2", spin_half.as_ref().ok()), ("adjoint", Some(&basis.adjoint))] {
        let Some(rep) = rep else { continue };
        r.run(format!("uq.qtrace.conjugation.{label}"), || {
            let u = quantum_trace_element(maps, rep)?;
            let results = check_u_conjugation(maps, rep, &u)?;
            let failed: Vec<_> = results.iter().filter(|x| !x.1).map(|x| x.0.clone()).collect();
            let witness = failed.first().map(|g| format!("u rho({g}) u^-1 != rho(S^2({g}))"));
            Ok(Outcome::Gated(failed.is_empty(), witness, json!({ "generators": results.len(), "failed": failed })))
        });
    }

    let metrics = (|| -> qsusy_core::Result<Metrics> {
        let half = spin_half.clone()?;
        let u_f = quantum_trace_element(maps, &half)?;
        let fundamental = QuantumMetric::new(&u_f, &basis.in_rep(&half)?)?;
        let u_ad = quantum_trace_element(maps, &basis.adjoint)?;
        let adjoint = QuantumMetric::new(&u_ad, &basis.ad_matrices()?)?;
        let lambda_ad = noncomm_factor(&basis.adjoint, &basis.adjoint)?;
        Ok(Metrics { fundamental, adjoint, lambda_ad })
    })();
    let m = match metrics {
        Ok(m) => m,
        Err(e) => {
            r.run("uq.metric", || Err(e));
            return;
        }
    };
    for (label, g) in [("fundamental", &m.fundamental), ("adjoint", &m.adjoint)] {
        r.run(format!("uq.metric.inverse.{label}"), || {
            let ok = g.inverse_identity_holds()?;
            Ok(Outcome::Gated(ok, Some("g g^-1 != identity".into()), json!({ "g": rendered(&g.g), "determinant": g.determinant.to_string() })))
        });
        r.run(format!("uq.metric.invariance.{label}"), || {
            let defect = g.check_invariance(&m.lambda_ad)?;
            let symmetric = g.scalar_product_symmetric(&m.lambda_ad)?;
            let witness = defect.as_ref().map(|d| format!("g lambda - g = {d}")).or(Some("scalar product is not lambda-symmetric".into()));
            Ok(Outcome::Gated(defect.is_none() && symmetric, witness, json!({ "contraction": defect.is_none(), "symmetric_product": symmetric })))
        });
    }
    r.run("uq.casimir-ratios", || {
        let c = casimir_form_compare(&m.adjoint, &acfg.q_r())?;
        let details = json!({
            "ratio_pm": c.ratio_pm.as_ref().map(|x| x.to_string()),
            "ratio_square": c.ratio_square.as_ref().map(|x| x.to_string()),
            "orientation": c.orientation,
            "others_zero": c.others_zero,
        });
        Ok(Outcome::Gated(c.passed, Some("adjoint metric ratios differ from q^{+-2} and (q+1/q)^2".into()), details))
    });

    let classical = |r: &mut Runner, id: &str, f: &dyn Fn() -> qsusy_core::Result<(bool, Value)>| {
        r.run(id, || {
            if !symbolic {
                return Ok(Outcome::Info(Some("skipped: --q-value fixes q, so s = 1 cannot be substituted".into()), Value::Null));
            }
            let (ok, details) = f()?;
            Ok(Outcome::Gated(ok, Some("classical limit differs".into()), details))
        });
    };
    classical(r, "uq.classical.flip", &|| {
        let ad = m.lambda_ad.classical_limit()? == Matrix::flip(3, 3);
        let half = spin_half.clone()?;
        let fund = noncomm_factor(&half, &half)?.classical_limit()? == Matrix::flip(2, 2);
        Ok((ad && fund, json!({ "adjoint": ad, "spin-1/2": fund })))
    });
    classical(r, "uq.classical.metric-orthonormal", &|| {
        let f = m.fundamental.classical_orthonormal()?;
        let a = m.adjoint.classical_orthonormal()?;
        let details = json!({ "fundamental_scale": f.as_ref().map(|x| x.to_string()), "adjoint_scale": a.as_ref().map(|x| x.to_string()) });
        Ok((f.is_some() && a.is_some(), details))
    });
    classical(r, "uq.classical.sl2-constants", &|| Ok((basis.classical_structure_matches_sl2()?, json!({ "basis": "e = T[1], h = -2 T[2], f = -T[3]" }))));

    r.run("uq.coproduct-shape", || {
        let shape = coproduct_shape(maps, &basis, &m.lambda_ad)?;
        let witness = match (shape.holds(), shape.flip_relation) {
            (false, _) => Some("Delta(T) has no decomposition T @ C + U @ T".to_string()),
            (true, Some(false)) => Some("decomposition holds; the flip relation between C, U and sigma does not".to_string()),
            _ => None,
        };
        let details = json!({
            "decomposition_holds": shape.holds(),
            "common_c": shape.common_c,
            "flip_relation": shape.flip_relation,
            "c": shape.c.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "classical_c": shape.classical_c,
            "classical_u": shape.classical_u,
        });
        Ok(Outcome::Info(witness, details))
    });
}

fn lagrangian_params(cfg: &SuiteConfig) -> LagrangianParams {
    LagrangianParams { g: cfg.coupling.clone(), theta: cfg.theta.clone() }
}

fn superspace_checks(r: &mut Runner, cfg: &SuiteConfig) {
    r.run("superspace.chirality", || {
        let phi = expand_superfield(SuperfieldKind::Chiral);
        let phibar = expand_superfield(SuperfieldKind::Antichiral);
        let chiral = (0..2).all(|ad| dbar(ad, &phi).is_zero());
        let antichiral = (0..2).all(|a| d(a, &phibar).is_zero());
        Ok(Outcome::Gated(chiral && antichiral, Some("Dbar Phi != 0".into()), json!({ "chiral": chiral, "antichiral": antichiral, "terms": phi.len() })))
    });
    r.run("superspace.vector-reality", || {
        let v = expand_superfield(SuperfieldKind::VectorWz);
        Ok(Outcome::Gated(v.conj() == v, Some("V^dagger != V".into()), json!({ "terms": v.len() })))
    });
    r.run("superspace.field-strength", || {
        let mut witness = None;
        for a in 0..2 {
            let w = field_strength_superfield(a);
            let diff = w.sub(&expected_field_strength(a));
            if !diff.is_zero() {
                witness = Some(format!("W_{} - expected = {diff}", a + 1));
            } else if let Some(ad) = (0..2).find(|&ad| !dbar(ad, &w).is_zero()) {
                witness = Some(format!("Dbar_{} W_{} != 0", ad + 1, a + 1));
            }
        }
        Ok(Outcome::Gated(witness.is_none(), witness, Value::Null))
    });
    r.run("superspace.wz-lagrangian", || {
        let wz = verify_wz_lagrangian()?;
        let unit = [&wz.auxiliary_coefficient, &wz.scalar_kinetic_coefficient, &wz.fermion_kinetic_coefficient]
            .iter()
            .all(|c| c.as_ref() == Some(&Coeff::one()));
        let details = json!({
            "auxiliary": coeff_text(&wz.auxiliary_coefficient),
            "scalar_kinetic": coeff_text(&wz.scalar_kinetic_coefficient),
            "fermion_kinetic": coeff_text(&wz.fermion_kinetic_coefficient),
            "lagrangian": wz.lagrangian.to_string(),
        });
        let witness = wz.witness.as_ref().map(|w| format!("difference modulo total derivatives: {w}"));
        Ok(Outcome::Gated(wz.passed && unit, witness, details))
    });
    let params = lagrangian_params(cfg);
    r.run("superspace.sym-abelian", || {
        let s = verify_sym_abelian(&params)?;
        let details = json!({
            "f_squared_per_inverse_g2": coeff_text(&s.f_squared),
            "f_dual_per_theta_over_pi2": coeff_text(&s.f_dual),
            "d_squared_per_inverse_g2": coeff_text(&s.d_squared),
            "gaugino_per_inverse_g2": coeff_text(&s.gaugino),
            "epsilon_0123": s.epsilon_0123,
            "odd_fermions_total_derivative": s.odd_fermions_total_derivative,
            "numeric": s.numeric.map(|n| n.iter().map(|x| format!("{x:.12e}")).collect::<Vec<_>>()),
        });
        Ok(Outcome::Gated(s.passed, Some("abelian gauge Lagrangian coefficients differ from -1/4, 1/32, 1/2".into()), details))
    });
}

/// Single-purpose views of the quantum-group data.
pub fn uq_view(view: UqView, cfg: &SuiteConfig) -> Result<Report, ConfigError> {
    cfg.validate()?;
    let acfg = cfg.algebra();
    let maps = StructureMaps::new(acfg.clone())?;
    let mut r = Runner::new(&format!("uq-{}", view_name(view)), cfg);
    match view {
        UqView::Rep => {
            for &two_j in &cfg.two_j {
                r.run(format!("uq.rep.spin-{}", spin_label(two_j)), || {
                    let rep = Rep::spin(two_j, &acfg)?;
                    let failures = rep.relation_failures()?;
                    let details = json!({ "E": rendered(rep.e()), "F": rendered(rep.f()), "K": rendered(rep.k()), "matrices": { "E": rep.e(), "F": rep.f(), "K": rep.k() } });
                    Ok(Outcome::Gated(failures.is_empty(), failures.first().cloned(), details))
                });
            }
        }
        UqView::Rmatrix => {
            for &two_j in &cfg.two_j {
                r.run(format!("uq.rmatrix.spin-{}", spin_label(two_j)), || {
                    let rep = Rep::spin(two_j, &acfg)?;
                    let rm = r_matrix(&rep, &rep)?;
                    let ybe = check_yang_baxter(&rep)?;
                    let details = json!({ "R": rendered(&rm.matrix), "braiding": rendered(&rm.braiding()?), "matrix": rm.matrix });
                    Ok(Outcome::Gated(ybe.is_none(), Some("Yang-Baxter equation fails".into()), details))
                });
            }
        }
        UqView::Metric | UqView::Qlie | UqView::Casimir => {
            r.run(format!("uq.{}", view_name(view)), || {
                let basis = quantum_lie_basis(&maps, cfg.max_degree)?;
                let u_ad = quantum_trace_element(&maps, &basis.adjoint)?;
                let metric = QuantumMetric::new(&u_ad, &basis.ad_matrices()?)?;
                Ok(match view {
                    UqView::Metric => {
                        let ok = metric.inverse_identity_holds()?;
                        let details = json!({
                            "u": rendered(&u_ad),
                            "g": rendered(&metric.g),
                            "g_inverse": metric.inverse.as_ref().map(rendered),
                            "determinant": metric.determinant.to_string(),
                            "matrix": metric.g,
                        });
                        Outcome::Gated(ok, Some("g g^-1 != identity".into()), details)
                    }
                    UqView::Qlie => {
                        let f: Vec<Vec<Vec<String>>> =
                            basis.f.iter().map(|m| m.iter().map(|r| r.iter().map(Scalar::to_string).collect()).collect()).collect();
                        let ad: Vec<Value> = basis.ad_matrices()?.iter().map(rendered).collect();
                        let details = json!({
                            "degree": basis.degree,
                            "elements": basis.elements.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
                            "structure_constants": f,
                            "ad": ad,
                        });
                        Outcome::Gated(basis.elements.len() == 3, None, details)
                    }
                    _ => {
                        let c = casimir_form_compare(&metric, &acfg.q_r())?;
                        let details = json!({
                            "ratio_pm": c.ratio_pm.as_ref().map(|x| x.to_string()),
                            "ratio_square": c.ratio_square.as_ref().map(|x| x.to_string()),
                            "orientation": c.orientation,
                        });
                        Outcome::Gated(c.passed, Some("ratios differ from q^{+-2} and (q+1/q)^2".into()), details)
                    }
                })
            });
        }
    }
    Ok(r.finish())
}

fn view_name(v: UqView) -> &'static str {
    match v {
        UqView::Rep => "rep",
        UqView::Rmatrix => "rmatrix",
        UqView::Metric => "metric",
        UqView::Qlie => "qlie",
        UqView::Casimir => "casimir",
    }
}

/// Component expansion of a superfield, with its defining constraint checked.
pub fn superfield_view(kind: FieldView, cfg: &SuiteConfig) -> Result<Report, ConfigError> {
    cfg.validate()?;
    let name = match kind {
        FieldView::Chiral => "chiral",
        FieldView::Antichiral => "antichiral",
        FieldView::Vector => "vector",
    };
    let mut r = Runner::new(&format!("super-expand-{name}"), cfg);
    r.run(format!("superspace.expand.{name}"), || {
        let (e, ok, witness) = match kind {
            FieldView::Chiral => {
                let e = expand_superfield(SuperfieldKind::Chiral);
                let ok = (0..2).all(|ad| dbar(ad, &e).is_zero());
                (e, ok, "Dbar Phi != 0")
            }
            FieldView::Antichiral => {
                let e = expand_superfield(SuperfieldKind::Antichiral);
                let ok = (0..2).all(|a| d(a, &e).is_zero());
                (e, ok, "D Phibar != 0")
            }
            FieldView::Vector => {
                let e = expand_superfield(SuperfieldKind::VectorWz);
                let ok = e.conj() == e;
                (e, ok, "V^dagger != V")
            }
        };
        let components: Vec<Value> = (0u8..16)
            .filter_map(|mask| {
                let c = e.component(mask);
                (!c.is_zero()).then(|| json!({ "coordinates": mask, "component": c.to_string() }))
            })
            .collect();
        Ok(Outcome::Gated(ok, Some(witness.into()), json!({ "expansion": e.to_string(), "components": components, "terms": e })))
    });
    Ok(r.finish())
}

#[derive(Debug, thiserror::Error)]
pub enum EvalCommandError {
    #[error("{rendered}")]
    Parse { error: ParseError, rendered: String },
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Config(#[from] ConfigError),
}

/// Parses, evaluates and normal-orders one expression. With `equals`, the
/// check is gated on both sides having the same normal form.
pub fn eval_report(text: &str, equals: Option<&str>, cfg: &SuiteConfig) -> Result<Report, EvalCommandError> {
    cfg.validate()?;
    let parse_one = |t: &str| parse(t).map_err(|error| EvalCommandError::Parse { rendered: error.render(t), error });
    let expr = parse_one(text)?;
    let rhs = equals.map(parse_one).transpose()?;
    let ev = Evaluator::new(cfg.algebra(), cfg.max_degree).map_err(ConfigError::from)?;
    let start = Instant::now();
    let value = ev.eval(&expr)?;
    let mut details = json!({ "input": text, "canonical": expr.to_string(), "result": value.to_string(), "value": value });
    let (passed, witness) = match rhs {
        None => (true, None),
        Some(rhs) => {
            let other = ev.eval(&rhs)?;
            let difference = ev.eval(&Expr::sub(expr.clone(), rhs.clone()))?;
            details["equals"] = json!({ "input": equals, "canonical": rhs.to_string(), "result": other.to_string() });
            let same = difference.is_zero();
            (same, (!same).then(|| format!("{value} != {other}; difference {difference}")))
        }
    };
    let mut r = Runner::new("eval", cfg);
    r.report.push(Check { duration_us: Some(start.elapsed().as_micros() as u64), ..Check::gated("eval", passed, witness, details) });
    Ok(r.finish())
}
