//! Lengths, reduced words and the left weak order, read off from signs of
//! roots: `ℓ(w s) < ℓ(w)` exactly when `w(α_s) < 0`.

use thiserror::Error;

use crate::admissible::{independent_decomposition, AdmissibleError, AdmissibleWord};
use crate::coxgraph::Vertex;
use crate::preproj::{CoxeterContext, PreprojError, PreprojectiveRecord, PsiSet};
use crate::rootsys::{GroupElement, RootSystem, RootVec, Sign};
use crate::tracemon::TraceWord;

/// Descent steps allowed before [`length`] gives up.
const MAX_DESCENT_STEPS: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WeakOrderError {
    #[error("no right descent after {steps} steps although the element is not the identity")]
    NoDescent { steps: usize },
    #[error("numerically ambiguous sign for {0}")]
    NumericalAmbiguity(String),
    #[error("{0} is not a positive vector")]
    NotPositive(String),
    #[error("reducedness test and principal decomposition disagree on {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Preproj(#[from] PreprojError),
    #[error(transparent)]
    Admissible(#[from] AdmissibleError),
}

fn is_negative(v: &RootVec) -> Result<bool, WeakOrderError> {
    match v.sign() {
        Sign::Positive => Ok(false),
        Sign::Negative => Ok(true),
        Sign::Zero | Sign::Mixed => Err(WeakOrderError::NumericalAmbiguity(v.to_string())),
    }
}

/// A group element with its length and a reduced word for it.
#[derive(Debug, Clone)]
pub struct LengthedElement {
    pub element: GroupElement,
    pub length: usize,
    pub witness: TraceWord,
}

/// Length by greedy right descents, smallest generator first.
pub fn length(system: &RootSystem, w: &GroupElement) -> Result<LengthedElement, WeakOrderError> {
    let mut current = w.clone();
    let mut steps: Vec<Vertex> = Vec::new();
    while !current.is_identity() {
        if steps.len() >= MAX_DESCENT_STEPS {
            return Err(WeakOrderError::NoDescent { steps: steps.len() });
        }
        let mut descent = None;
        for s in 0..system.rank() {
            if is_negative(&current.image_of_simple(s))? {
                descent = Some(s);
                break;
            }
        }
        let s = descent.ok_or(WeakOrderError::NoDescent { steps: steps.len() })?;
        current = current.compose(&system.reflection(s));
        steps.push(s);
    }
    // w s_1 ... s_k = 1, so w = s_k ... s_1
    Ok(LengthedElement {
        element: w.clone(),
        length: steps.len(),
        witness: TraceWord::from_applied(steps),
    })
}

/// Whether `ℓ(ρ(X)) = ℓ(X)`: reading the written word left to right, each
/// new letter must not be a right descent of the product so far.
pub fn is_reduced(system: &RootSystem, word: &TraceWord) -> Result<bool, WeakOrderError> {
    let mut w = GroupElement::identity(system.rank());
    for &s in word.written() {
        if is_negative(&w.image_of_simple(s))? {
            return Ok(false);
        }
        w = w.compose(&system.reflection(s));
    }
    Ok(true)
}

/// `u ≤_L v` via `ℓ(v) = ℓ(u) + ℓ(v u⁻¹)`.
pub fn leq_left(
    system: &RootSystem,
    u: &GroupElement,
    v: &GroupElement,
) -> Result<bool, WeakOrderError> {
    let lu = length(system, u)?.length;
    let lv = length(system, v)?.length;
    if lu > lv {
        return Ok(false);
    }
    let quotient = length(system, &v.compose(&u.inverse()))?.length;
    Ok(lv == lu + quotient)
}

/// Whether the reflection along the positive root `α` lies in `T_R(w)`,
/// i.e. `w(α) < 0`.
pub fn in_right_reflections(w: &GroupElement, alpha: &RootVec) -> Result<bool, WeakOrderError> {
    if is_negative(alpha)? {
        return Err(WeakOrderError::NotPositive(alpha.to_string()));
    }
    is_negative(&w.apply(alpha))
}

#[derive(Debug, Clone)]
pub enum Classification {
    /// `X = W_Ψ` for the independent set `Ψ`.
    Reduced(PsiSet),
    NotReduced,
}

impl Classification {
    pub fn is_reduced(&self) -> bool {
        matches!(self, Classification::Reduced(_))
    }
}

/// Splits `x` into its independent principal factors and tests each factor
/// for being `W_α` of a preprojective root. The outcome must agree with
/// [`is_reduced`]; disagreement is reported as an error.
pub fn classify_admissible(
    ctx: &CoxeterContext,
    x: &AdmissibleWord,
) -> Result<Classification, WeakOrderError> {
    let reduced = is_reduced(ctx.system(), x.word())?;
    let mut records: Vec<PreprojectiveRecord> = Vec::new();
    let mut all_preprojective = true;
    for p in independent_decomposition(x)? {
        match ctx.principal_record(p.size(), p.apex())? {
            Some(rec) => records.push(rec),
            None => {
                all_preprojective = false;
                break;
            }
        }
    }
    if reduced != all_preprojective {
        return Err(WeakOrderError::Inconsistent(x.to_string()));
    }
    if !reduced {
        return Ok(Classification::NotReduced);
    }
    records.sort_by_key(|r| (r.size, r.apex));
    Ok(Classification::Reduced(PsiSet {
        roots: records,
        independent: true,
        w_psi: x.clone(),
    }))
}

/// The unique independent `Ψ` with `W_Ψ = W_Θ`.
pub fn approximate(
    ctx: &CoxeterContext,
    theta: &[RootVec],
    r_max: usize,
) -> Result<PsiSet, WeakOrderError> {
    let w = ctx.w_psi(theta, r_max, None)?.w_psi;
    match classify_admissible(ctx, &w)? {
        Classification::Reduced(psi) => {
            let roots: Vec<RootVec> = psi.roots.iter().map(|r| r.root.clone()).collect();
            let again = ctx.w_psi(&roots, r_max, None)?;
            if again.w_psi != w || !again.independent {
                return Err(WeakOrderError::Inconsistent(w.to_string()));
            }
            Ok(psi)
        }
        Classification::NotReduced => Err(WeakOrderError::Inconsistent(w.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use std::collections::{HashMap, HashSet, VecDeque};

    use super::*;
    use crate::admissible::enumerate;
    use crate::coxgraph::{preset, Orientation, Preset};

    fn system(name: &str, p: &[&str]) -> RootSystem {
        RootSystem::from_matrix(preset(name, p).unwrap())
    }

    fn w(s: &[usize]) -> TraceWord {
        TraceWord::from_written(s.iter().map(|x| x - 1).collect())
    }

    fn key(g: &GroupElement) -> Vec<i64> {
        g.matrix()
            .iter()
            .map(|x| (x * 1e6).round() as i64)
            .collect()
    }

    /// Every element of a finite group with its length, by breadth-first
    /// search on left multiplication.
    fn all_elements(rs: &RootSystem) -> Vec<(GroupElement, usize)> {
        let id = GroupElement::identity(rs.rank());
        let mut seen = HashSet::from([key(&id)]);
        let mut out = vec![(id.clone(), 0)];
        let mut queue = VecDeque::from([(id, 0)]);
        while let Some((g, l)) = queue.pop_front() {
            for s in 0..rs.rank() {
                let h = rs.reflection(s).compose(&g);
                if seen.insert(key(&h)) {
                    out.push((h.clone(), l + 1));
                    queue.push_back((h, l + 1));
                }
            }
        }
        out
    }

    /// `u ≤_L v` by searching for a chain `v = s_k ... s_1 u` whose lengths
    /// grow by one at every step.
    fn staircase_leq(
        rs: &RootSystem,
        lengths: &HashMap<Vec<i64>, usize>,
        u: &GroupElement,
        v: &GroupElement,
    ) -> bool {
        let target = key(v);
        let mut frontier = vec![u.clone()];
        let mut seen = HashSet::new();
        while let Some(g) = frontier.pop() {
            if key(&g) == target {
                return true;
            }
            let lg = lengths[&key(&g)];
            for s in 0..rs.rank() {
                let h = rs.reflection(s).compose(&g);
                if lengths[&key(&h)] == lg + 1 && seen.insert(key(&h)) {
                    frontier.push(h);
                }
            }
        }
        false
    }

    #[test]
    fn length_examples() {
        let a2 = system("A", &["2"]);
        assert_eq!(length(&a2, &GroupElement::identity(2)).unwrap().length, 0);
        let w0 = a2.element_of_word(&w(&[1, 2, 1]));
        let l = length(&a2, &w0).unwrap();
        assert_eq!(l.length, 3);
        assert!(a2.element_of_word(&l.witness).approx_eq(&w0));
        assert!(is_reduced(&a2, &l.witness).unwrap());
    }

    #[test]
    fn coxeter_elements_have_length_n() {
        for p in Preset::catalog() {
            let rs = RootSystem::from_matrix(p.matrix().unwrap());
            let k = TraceWord::from_applied(0..rs.rank());
            let l = length(&rs, &rs.element_of_word(&k)).unwrap();
            assert_eq!(l.length, rs.rank(), "{}", p.name());
            assert!(rs
                .element_of_word(&l.witness)
                .approx_eq(&rs.element_of_word(&k)));
        }
    }

    #[test]
    fn lengths_match_breadth_first_distance() {
        for (name, p) in [("A", "3"), ("B", "3"), ("I2", "5")] {
            let rs = system(name, &[p]);
            for (g, l) in all_elements(&rs) {
                assert_eq!(length(&rs, &g).unwrap().length, l, "{name}{p}");
            }
        }
    }

    #[test]
    fn reducedness() {
        let a2 = system("A", &["2"]);
        assert!(is_reduced(&a2, &w(&[1])).unwrap());
        assert!(is_reduced(&a2, &w(&[1, 2, 1])).unwrap());
        assert!(!is_reduced(&a2, &w(&[1, 1])).unwrap());
        assert!(!is_reduced(&a2, &w(&[2, 1, 2, 1])).unwrap());
        assert!(is_reduced(&a2, &TraceWord::empty()).unwrap());

        let inf = system("I2", &["inf"]);
        let o = Orientation::from_order(inf.graph(), &crate::coxgraph::VertexOrder::identity(2));
        for x in enumerate(&o, 12) {
            assert!(is_reduced(&inf, x.word()).unwrap());
        }
    }

    #[test]
    fn reducedness_agrees_with_length() {
        let a3 = system("A", &["3"]);
        let mut words = vec![TraceWord::empty()];
        for _ in 0..5 {
            words = words
                .iter()
                .flat_map(|x| (0..3).map(move |s| x.concat(&TraceWord::letter(s))))
                .collect();
            for x in &words {
                let l = length(&a3, &a3.element_of_word(x)).unwrap().length;
                assert_eq!(is_reduced(&a3, x).unwrap(), l == x.len(), "{x}");
            }
        }
    }

    #[test]
    fn weak_order_examples() {
        let a2 = system("A", &["2"]);
        let s1 = a2.element_of_word(&w(&[1]));
        let s2 = a2.element_of_word(&w(&[2]));
        let s2s1 = a2.element_of_word(&w(&[2, 1]));
        assert!(leq_left(&a2, &s1, &s2s1).unwrap());
        assert!(!leq_left(&a2, &s2, &s2s1).unwrap());
        assert!(leq_left(&a2, &GroupElement::identity(2), &s2s1).unwrap());
    }

    #[test]
    fn weak_order_matches_staircase() {
        for (name, p) in [("A", "2"), ("A", "3")] {
            let rs = system(name, &[p]);
            let elems = all_elements(&rs);
            let lengths: HashMap<Vec<i64>, usize> =
                elems.iter().map(|(g, l)| (key(g), *l)).collect();
            for (u, _) in &elems {
                for (v, _) in &elems {
                    assert_eq!(
                        leq_left(&rs, u, v).unwrap(),
                        staircase_leq(&rs, &lengths, u, v)
                    );
                }
            }
        }
    }

    #[test]
    fn right_reflections() {
        let a3 = system("A", &["3"]);
        let positives = a3.enumerate_roots(10);
        assert_eq!(positives.len(), 6);
        let s = a3.reflection(1);
        assert!(in_right_reflections(&s, &a3.simple_root(1)).unwrap());
        let elems = all_elements(&a3);
        for (g, l) in &elems {
            let count = positives
                .iter()
                .filter(|a| in_right_reflections(g, a).unwrap())
                .count();
            assert_eq!(count, *l);
        }
        for (u, _) in &elems {
            for (v, _) in &elems {
                if leq_left(&a3, u, v).unwrap() {
                    for a in &positives {
                        if in_right_reflections(u, a).unwrap() {
                            assert!(in_right_reflections(v, a).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn classification_examples() {
        let a2 = CoxeterContext::standard(preset("A", &["2"]).unwrap()).unwrap();
        let x = AdmissibleWord::new(w(&[1, 2, 1]), a2.orientation()).unwrap();
        match classify_admissible(&a2, &x).unwrap() {
            Classification::Reduced(psi) => {
                assert_eq!(psi.roots.len(), 1);
                assert_eq!(psi.roots[0].root.to_string(), "0 1");
            }
            Classification::NotReduced => panic!("v1 v2 v1 is reduced"),
        }
        let k2 = AdmissibleWord::new(w(&[2, 1, 2, 1]), a2.orientation()).unwrap();
        assert!(!classify_admissible(&a2, &k2).unwrap().is_reduced());

        let rs = RootSystem::from_matrix(preset("A", &["3"]).unwrap());
        let o = Orientation::from_arrows(rs.graph(), &[(1, 0), (1, 2)]).unwrap();
        let a3 = CoxeterContext::from_orientation(rs, &o).unwrap();
        let x = AdmissibleWord::new(w(&[3, 1]), a3.orientation()).unwrap();
        match classify_admissible(&a3, &x).unwrap() {
            Classification::Reduced(psi) => {
                let roots: Vec<String> = psi.roots.iter().map(|r| r.root.to_string()).collect();
                assert_eq!(roots, vec!["1 0 0", "0 0 1"]);
            }
            Classification::NotReduced => panic!("v3 v1 is reduced"),
        }
    }

    #[test]
    fn approximation() {
        let a2 = CoxeterContext::standard(preset("A", &["2"]).unwrap()).unwrap();
        let a1 = a2.system().simple_root(0);
        let a2r = a2.system().simple_root(1);
        let psi = approximate(&a2, &[a1.clone(), a2r.clone()], 10).unwrap();
        assert_eq!(psi.roots.len(), 1);
        assert!(psi.roots[0].root.approx_eq(&a2r));
        let psi = approximate(&a2, &[a1.clone()], 10).unwrap();
        assert!(psi.roots[0].root.approx_eq(&a1));
        let psi = approximate(&a2, &[], 10).unwrap();
        assert!(psi.roots.is_empty() && psi.w_psi.is_empty());
    }
}
