use super::element::AlgebraElement;
use super::generator::{word_parity, Generator, Word};
use crate::error::{Error, Result};
use crate::scalar::{Gq, Scalar};
use crate::susy::{BasisSymbol, BracketTable};
use serde::{Deserialize, Serialize};
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

/// Parameters of the algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraConfig {
    /// Number of supersymmetries N.
    pub n_susy: u8,
    /// Killing normalisation ⟨H,H⟩, so that `q_r = q^{⟨H,H⟩}`.
    pub killing_hh: u32,
    /// Maximum number of rule applications in one normal-form computation.
    pub step_budget: usize,
    /// Numeric value substituted for `q` throughout (symbolic when absent).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q_value: Option<Gq>,
}

impl Default for AlgebraConfig {
    fn default() -> Self {
        AlgebraConfig { n_susy: 2, killing_hh: 1, step_budget: 1_000_000, q_value: None }
    }
}

impl AlgebraConfig {
    pub fn with_n(n_susy: u8) -> Self {
        AlgebraConfig { n_susy, ..Default::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_susy == 0 {
            return Err(Error::InvalidParameter("N must be at least 1".into()));
        }
        if self.killing_hh == 0 {
            return Err(Error::InvalidParameter("<H,H> must be positive".into()));
        }
        if let Some(q0) = &self.q_value {
            if q0.is_zero() {
                return Err(Error::InvalidParameter("q must be nonzero".into()));
            }
            if self.killing_hh % 2 == 1 && q0.rational_sqrt().is_none() {
                return Err(Error::InvalidParameter(format!(
                    "q = {q0} needs a rational square root when <H,H> is odd"
                )));
            }
            let qr = self.q_r();
            if (&qr * &qr).is_one() {
                return Err(Error::InvalidParameter(format!("q_r = {qr} is a pole of the U_q relations")));
            }
        }
        Ok(())
    }

    /// `q`, or its numeric value when specialised.
    pub fn q(&self) -> Scalar {
        match &self.q_value {
            None => Scalar::q(),
            Some(q0) => Scalar::constant(q0.clone()),
        }
    }

    /// `q_r^{1/2} = s^{⟨H,H⟩}`
    pub fn half_qr(&self) -> Scalar {
        let hh = self.killing_hh as i32;
        match &self.q_value {
            None => Scalar::s_pow(hh),
            Some(q0) if hh % 2 == 0 => Scalar::constant(q0.pow(hh / 2).unwrap()),
            Some(q0) => Scalar::constant(q0.rational_sqrt().unwrap().pow(hh).unwrap()),
        }
    }

    pub fn q_r(&self) -> Scalar {
        let h = self.half_qr();
        &h * &h
    }
}

pub type RuleRhs = Vec<(Scalar, Word)>;

/// Oriented relations `xy → Σ c·w` for adjacent generator pairs.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    config: AlgebraConfig,
    table: BracketTable,
    rules: HashMap<(Generator, Generator), RuleRhs>,
}

impl RewriteSystem {
    pub fn new(config: AlgebraConfig) -> Result<Self> {
        let table = BracketTable::new(config.n_susy)?;
        RewriteSystem::with_table(config, table)
    }

    pub fn with_table(config: AlgebraConfig, table: BracketTable) -> Result<Self> {
        config.validate()?;
        if table.n_susy() != config.n_susy {
            return Err(Error::InvalidParameter("bracket table and algebra disagree on N".into()));
        }
        let mut rs = RewriteSystem { config, table, rules: HashMap::new() };
        rs.build_rules();
        Ok(rs)
    }

    pub fn config(&self) -> &AlgebraConfig {
        &self.config
    }

    pub fn table(&self) -> &BracketTable {
        &self.table
    }

    pub fn q_r(&self) -> Scalar {
        self.config.q_r()
    }

    pub fn generators(&self) -> Vec<Generator> {
        Generator::all(self.config.n_susy)
    }

    pub fn rule(&self, x: Generator, y: Generator) -> Option<&RuleRhs> {
        self.rules.get(&(x, y))
    }

    /// All rules in a deterministic order.
    pub fn rules(&self) -> Vec<((Generator, Generator), &RuleRhs)> {
        let mut v: Vec<_> = self.rules.iter().map(|(k, r)| (*k, r)).collect();
        v.sort_by_key(|(k, _)| *k);
        v
    }

    /// Replaces or adds a rule; intended for experimenting with user rule sets.
    pub fn set_rule(&mut self, x: Generator, y: Generator, rhs: RuleRhs) {
        self.rules.insert((x, y), rhs);
    }

    fn build_rules(&mut self) {
        use Generator::*;
        let gens = self.generators();
        let qr = self.q_r();
        let qri = qr.inv().unwrap();
        let one = Scalar::one();
        let inv_diff = (&qr - &qri).inv().unwrap();

        for &g in &gens {
            if g != Grading {
                self.rules.insert((Grading, g), vec![(Scalar::from_i64(g.parity().into()), vec![g, Grading])]);
            }
        }
        self.rules.insert((Grading, Grading), vec![(one.clone(), vec![])]);

        self.rules.insert((K, Kinv), vec![(one.clone(), vec![])]);
        self.rules.insert((Kinv, K), vec![(one.clone(), vec![])]);
        self.rules.insert((E, K), vec![(qri.clone(), vec![K, E])]);
        self.rules.insert((F, K), vec![(qr.clone(), vec![K, F])]);
        self.rules.insert((E, Kinv), vec![(qr.clone(), vec![Kinv, E])]);
        self.rules.insert((F, Kinv), vec![(qri.clone(), vec![Kinv, F])]);
        self.rules.insert(
            (E, F),
            vec![
                (one.clone(), vec![F, E]),
                (inv_diff.clone(), vec![K, K]),
                (-&inv_diff, vec![Kinv, Kinv]),
            ],
        );

        for &x in &gens {
            for &y in &gens {
                if x.is_quantum() && y.is_classical() {
                    self.rules.insert((x, y), vec![(one.clone(), vec![y, x])]);
                }
                if x.is_classical() && y.is_classical() && x >= y {
                    if x == y && !x.is_odd() {
                        continue;
                    }
                    let bx = BasisSymbol::from_generator(x).unwrap();
                    let by = BasisSymbol::from_generator(y).unwrap();
                    let br = self.table.bracket(bx, by).expect("valid classical symbols");
                    let mut rhs: RuleRhs = Vec::new();
                    if x == y {
                        for (s, c) in br.iter() {
                            rhs.push((c * &Scalar::from_ratio(1, 2), vec![s.to_generator().unwrap()]));
                        }
                    } else {
                        let sign = if x.is_odd() && y.is_odd() { -1 } else { 1 };
                        rhs.push((Scalar::from_i64(sign), vec![y, x]));
                        for (s, c) in br.iter() {
                            rhs.push((c.clone(), vec![s.to_generator().unwrap()]));
                        }
                    }
                    self.rules.insert((x, y), rhs);
                }
            }
        }
    }

    fn first_redex(&self, w: &[Generator]) -> Option<(usize, &RuleRhs)> {
        w.windows(2)
            .enumerate()
            .find_map(|(i, p)| self.rules.get(&(p[0], p[1])).map(|r| (i, r)))
    }

    pub fn is_normal_word(&self, w: &[Generator]) -> bool {
        self.first_redex(w).is_none()
    }

    pub fn normal_form(&self, a: &AlgebraElement) -> Result<AlgebraElement> {
        let mut done = AlgebraElement::zero();
        let mut pending: BTreeMap<Word, Scalar> = a.terms().clone();
        let mut steps = 0usize;
        while let Some((w, c)) = pending.pop_first() {
            match self.first_redex(&w) {
                None => done.add_term(w, c),
                Some((i, rhs)) => {
                    steps += 1;
                    if steps > self.config.step_budget {
                        return Err(Error::StepBudget(self.config.step_budget));
                    }
                    for (rc, rw) in rhs {
                        let mut nw = Vec::with_capacity(w.len() + rw.len());
                        nw.extend_from_slice(&w[..i]);
                        nw.extend_from_slice(rw);
                        nw.extend_from_slice(&w[i + 2..]);
                        let nc = &c * rc;
                        if nc.is_zero() {
                            continue;
                        }
                        match pending.entry(nw) {
                            Entry::Vacant(v) => {
                                v.insert(nc);
                            }
                            Entry::Occupied(mut o) => {
                                let sum = o.get() + &nc;
                                if sum.is_zero() {
                                    o.remove();
                                } else {
                                    *o.get_mut() = sum;
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(done)
    }

    pub fn multiply(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.normal_form(&a.concat(b))
    }

    pub fn multiply_all(&self, factors: &[AlgebraElement]) -> Result<AlgebraElement> {
        let mut acc = AlgebraElement::one();
        for f in factors {
            acc = self.multiply(&acc, f)?;
        }
        Ok(acc)
    }

    pub fn word(&self, w: &[Generator]) -> Result<AlgebraElement> {
        for g in w {
            g.validate(self.config.n_susy)?;
        }
        self.normal_form(&AlgebraElement::from_word(w.to_vec()))
    }

    pub fn parity(&self, w: &[Generator]) -> i8 {
        word_parity(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    fn rs() -> RewriteSystem {
        RewriteSystem::new(AlgebraConfig::default()).unwrap()
    }

    fn nf(w: &[Generator]) -> AlgebraElement {
        rs().word(w).unwrap()
    }

    #[test]
    fn unit_law() {
        for g in rs().generators() {
            let x = AlgebraElement::generator(g);
            assert_eq!(rs().multiply(&AlgebraElement::one(), &x).unwrap(), rs().normal_form(&x).unwrap());
        }
    }

    #[test]
    fn supercharge_squares_vanish() {
        assert!(nf(&[Q(1, 1), Q(1, 1)]).is_zero());
        assert!(nf(&[Qbar(2, 1), Qbar(2, 1)]).is_zero());
    }

    #[test]
    fn k_e_commutation() {
        // K·E is already ordered; it equals q_r·E·K.
        let ke = nf(&[K, E]);
        let ek = nf(&[E, K]).scale(&rs().q_r());
        assert_eq!(ke, ek);
        assert_eq!(ke, AlgebraElement::from_word(vec![K, E]));
    }

    #[test]
    fn grading_rules() {
        assert_eq!(nf(&[Grading, Q(1, 1)]), AlgebraElement::term(-Scalar::one(), vec![Q(1, 1), Grading]));
        assert_eq!(nf(&[Grading, P(0)]), AlgebraElement::from_word(vec![P(0), Grading]));
        assert_eq!(nf(&[Grading, Grading]), AlgebraElement::one());
    }

    #[test]
    fn grading_is_confluent_on_critical_pair() {
        // 𝔍·Q·P reduced by either first step
        let left = rs().multiply(&nf(&[Grading, Q(1, 1)]), &AlgebraElement::generator(P(0))).unwrap();
        let right = rs().multiply(&AlgebraElement::generator(Grading), &nf(&[Q(1, 1), P(0)])).unwrap();
        assert_eq!(left, right);
        assert!(!left.is_zero());
    }

    #[test]
    fn e_f_relation() {
        let ef = nf(&[E, F]);
        let fe = AlgebraElement::from_word(vec![F, E]);
        let r = rs();
        let d = (&r.q_r() - &r.q_r().inv().unwrap()).inv().unwrap();
        let expected = fe
            .add(&AlgebraElement::term(d.clone(), vec![K, K]))
            .add(&AlgebraElement::term(-d, vec![Kinv, Kinv]));
        assert_eq!(ef, expected);
    }

    #[test]
    fn rules_preserve_parity() {
        for ((x, y), rhs) in rs().rules() {
            let p = x.parity() * y.parity();
            for (_, w) in rhs {
                assert_eq!(word_parity(w), p, "{x}{y}");
            }
        }
    }

    #[test]
    fn specialised_q() {
        let cfg = AlgebraConfig { q_value: Some(Gq::from_i64(4)), ..Default::default() };
        assert_eq!(cfg.q_r(), Scalar::from_i64(4));
        assert_eq!(cfg.half_qr(), Scalar::from_i64(2));
        let bad = AlgebraConfig { q_value: Some(Gq::from_i64(2)), ..Default::default() };
        assert!(bad.validate().is_err());
        let pole = AlgebraConfig { q_value: Some(Gq::from_i64(1)), ..Default::default() };
        assert!(pole.validate().is_err());
        let r = RewriteSystem::new(cfg).unwrap();
        assert_eq!(r.word(&[E, K]).unwrap(), AlgebraElement::term(Scalar::from_ratio(1, 4), vec![K, E]));
    }

    #[test]
    fn budget_guard() {
        let mut r = RewriteSystem::new(AlgebraConfig { step_budget: 50, ..Default::default() }).unwrap();
        r.set_rule(E, F, vec![(Scalar::one(), vec![E, F])]);
        assert_eq!(r.word(&[E, F]), Err(Error::StepBudget(50)));
    }

    #[test]
    fn q_qbar_anticommutator() {
        let r = rs();
        let x = r.word(&[Q(1, 1), Qbar(1, 1)]).unwrap();
        let y = r.word(&[Qbar(1, 1), Q(1, 1)]).unwrap();
        let expected = AlgebraElement::from_terms([(vec![P(0)], Scalar::from_i64(2)), (vec![P(3)], Scalar::from_i64(2))]);
        assert_eq!(x.add(&y), expected);
    }
}
