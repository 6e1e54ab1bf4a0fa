//! Preprojective and projective roots of a Coxeter element.
//!
//! A positive root `α` is c-preprojective of size `r` when `c^r α < 0` for a
//! least `r > 0`. Its least negating admissible word is the principal word
//! `W_{r,x}`, and `α = ρ(W_{r,x}ᵀ)(−α_x)`.
//!
//! Sizes found by iterating `c` are semi-decisions: failure within `r_max`
//! says nothing about larger powers.

mod context;
mod finite_type;

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use thiserror::Error;

pub use context::CoxeterContext;
pub use finite_type::{finite_type_oracle, CoxeterType};

use crate::admissible::{
    independent_decomposition, principal_word, AdmissibleError, AdmissibleWord, PrincipalWord,
};
use crate::coxgraph::{GraphError, Vertex};
use crate::rootsys::{RootError, RootVec, Sign};
use crate::tracemon::TraceWord;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PreprojError {
    #[error("numerically ambiguous sign for {0}")]
    NumericalAmbiguity(String),
    #[error("{0} is not a positive vector")]
    NotPositive(String),
    #[error("{root} is not preprojective within r_max = {r_max}")]
    NotPreprojectiveWithinBound { root: String, r_max: usize },
    #[error("no projective root matches {0}")]
    NoProjectiveMatch(String),
    #[error("formula mismatch: {0}")]
    FormulaMismatch(String),
    #[error("no admissible word of length <= {bound} negates every root")]
    SearchBoundExceeded { bound: usize },
    #[error(transparent)]
    Admissible(#[from] AdmissibleError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Root(#[from] RootError),
}

/// `Ok(true)` for positive, `Ok(false)` for negative vectors.
fn definite_sign(v: &RootVec) -> Result<bool, PreprojError> {
    match v.sign() {
        Sign::Positive => Ok(true),
        Sign::Negative => Ok(false),
        Sign::Zero | Sign::Mixed => Err(PreprojError::NumericalAmbiguity(v.to_string())),
    }
}

fn mismatch(what: &str, a: &RootVec, b: &RootVec) -> PreprojError {
    PreprojError::FormulaMismatch(format!("{what}: [{a}] vs [{b}]"))
}

/// A c-preprojective root with its size `r`, apex `x` and `W_α = W_{r,x}`.
#[derive(Debug, Clone)]
pub struct PreprojectiveRecord {
    pub root: RootVec,
    pub size: usize,
    pub apex: Vertex,
    pub principal: PrincipalWord,
}

impl fmt::Display for PreprojectiveRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "root=[{}] size={} apex={} word={}",
            self.root,
            self.size,
            self.apex + 1,
            self.principal.word()
        )
    }
}

/// A finite set of preprojective roots and its least negating word `W_Ψ`.
#[derive(Debug, Clone)]
pub struct PsiSet {
    /// Distinct members, sorted by `(size, apex)`.
    pub roots: Vec<PreprojectiveRecord>,
    pub independent: bool,
    pub w_psi: AdmissibleWord,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Finiteness {
    Finite,
    Unknown,
}

impl fmt::Display for Finiteness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Finiteness::Finite => "finite",
            Finiteness::Unknown => "unknown",
        })
    }
}

/// The size of a root and its generator, found independently in three ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeWitnesses {
    /// Least `r` with `c^r α < 0`.
    pub by_powers: Option<usize>,
    /// `(r, s)` with `α = c^{-r+1} π_s` and `c^{-i} π_s > 0` for `0 < i < r`.
    pub by_projective: Option<(usize, Vertex)>,
    /// `(r, x)` with `α = ρ(W_{r,x}ᵀ)(−α_x)` and the intermediate roots positive.
    pub by_principal: Option<(usize, Vertex)>,
}

impl CoxeterContext {
    /// Whether `ρ(X) α < 0`, for a positive `α`.
    pub fn negates(&self, word: &TraceWord, alpha: &RootVec) -> Result<bool, PreprojError> {
        self.system().check_dim(alpha)?;
        word.check_rank(self.rank())
            .map_err(AdmissibleError::from)?;
        if !definite_sign(alpha)? {
            return Err(PreprojError::NotPositive(alpha.to_string()));
        }
        Ok(!definite_sign(&self.system().apply_word(word, alpha))?)
    }

    /// The least `r <= r_max` with `c^r α < 0`, or `None` within the bound.
    pub fn preprojective_size(
        &self,
        alpha: &RootVec,
        r_max: usize,
    ) -> Result<Option<usize>, PreprojError> {
        self.system().check_dim(alpha)?;
        if !definite_sign(alpha)? {
            return Err(PreprojError::NotPositive(alpha.to_string()));
        }
        let mut v = alpha.clone();
        for r in 1..=r_max {
            v = self.coxeter_element().apply(&v);
            if !definite_sign(&v)? {
                return Ok(Some(r));
            }
        }
        Ok(None)
    }

    /// `ρ(W_{r,x}ᵀ)(−α_x)`.
    pub fn principal_root(&self, principal: &PrincipalWord) -> RootVec {
        let x = principal.apex();
        let minus = -self.system().simple_root(x);
        self.system()
            .apply_word(&principal.word().word().transpose(), &minus)
    }

    /// `π_s(c) = ρ(W_{1,s}ᵀ)(−α_s)`.
    pub fn projective_root_by_transpose(&self, s: Vertex) -> Result<RootVec, PreprojError> {
        let p = principal_word(1, s, self.orientation())?;
        Ok(self.principal_root(&p))
    }

    /// `π_s(c) = Σ_p B(p) α_{t(p)}` over the paths `p` starting at `s`.
    pub fn projective_root_by_paths(&self, s: Vertex) -> RootVec {
        self.system().path_weight_sums(s, self.orientation())
    }

    /// `π_s(c)` for every generator, computed by both formulas and compared.
    pub fn projective_roots(&self) -> Result<Vec<RootVec>, PreprojError> {
        let mut out = Vec::with_capacity(self.rank());
        for s in 0..self.rank() {
            let a = self.projective_root_by_transpose(s)?;
            let b = self.projective_root_by_paths(s);
            if !a.approx_eq(&b) {
                return Err(mismatch(&format!("projective root of s{}", s + 1), &a, &b));
            }
            out.push(a);
        }
        for i in 0..out.len() {
            for j in 0..i {
                if out[i].approx_eq(&out[j]) {
                    return Err(mismatch("projective roots coincide", &out[i], &out[j]));
                }
            }
        }
        Ok(out)
    }

    /// `π_s(c⁻¹)` for every generator, after checking `−c·π_s(c) = π_s(c⁻¹)`
    /// and `−c⁻¹·π_s(c⁻¹) = π_s(c)`.
    pub fn minus_c_image(&self) -> Result<Vec<RootVec>, PreprojError> {
        let inverse = self.inverse_context();
        let here = self.projective_roots()?;
        let there = inverse.projective_roots()?;
        let c = self.coxeter_element();
        let c_inv = inverse.coxeter_element();
        for (p, q) in here.iter().zip(&there) {
            let forward = -c.apply(p);
            if !forward.approx_eq(q) {
                return Err(mismatch("-c image", &forward, q));
            }
            let back = -c_inv.apply(q);
            if !back.approx_eq(p) {
                return Err(mismatch("-c^-1 image", &back, p));
            }
        }
        Ok(there)
    }

    /// The record of `W_{r,x}` if `ρ(W_{i,x}ᵀ)(−α_x) > 0` for `1 < i <= r`,
    /// which makes its root preprojective of size `r` with `W_α = W_{r,x}`.
    pub fn principal_record(
        &self,
        r: usize,
        x: Vertex,
    ) -> Result<Option<PreprojectiveRecord>, PreprojError> {
        let mut last = None;
        for i in 1..=r {
            let p = principal_word(i, x, self.orientation())?;
            let beta = self.principal_root(&p);
            if !definite_sign(&beta)? {
                return Ok(None);
            }
            last = Some(PreprojectiveRecord {
                root: beta,
                size: i,
                apex: x,
                principal: p,
            });
        }
        Ok(last)
    }

    /// `W_α`: the size comes from powers of `c` and the apex from matching
    /// `c^{r-1} α` against the projective roots. Both are then validated on
    /// the principal word.
    pub fn w_alpha(
        &self,
        alpha: &RootVec,
        r_max: usize,
    ) -> Result<PreprojectiveRecord, PreprojError> {
        let r = self.preprojective_size(alpha, r_max)?.ok_or_else(|| {
            PreprojError::NotPreprojectiveWithinBound {
                root: alpha.to_string(),
                r_max,
            }
        })?;
        let mut v = alpha.clone();
        for _ in 1..r {
            v = self.coxeter_element().apply(&v);
        }
        let projective = self.projective_roots()?;
        let matches: Vec<Vertex> = (0..self.rank())
            .filter(|&s| projective[s].approx_eq(&v))
            .collect();
        let &[x] = matches.as_slice() else {
            return Err(PreprojError::NoProjectiveMatch(alpha.to_string()));
        };
        let principal = principal_word(r, x, self.orientation())?;

        let image = self.system().apply_word(principal.word().word(), alpha);
        let target = -self.system().simple_root(x);
        if !image.approx_eq(&target) {
            return Err(mismatch("ρ(W_α)α", &image, &target));
        }
        for i in 1..r {
            let beta = self.principal_root(&principal_word(i, x, self.orientation())?);
            if !definite_sign(&beta)? {
                return Err(PreprojError::FormulaMismatch(format!(
                    "intermediate root [{beta}] of W({i}, {}) is negative",
                    x + 1
                )));
            }
        }
        Ok(PreprojectiveRecord {
            root: alpha.clone(),
            size: r,
            apex: x,
            principal,
        })
    }

    /// Default search bound for [`w_psi`](Self::w_psi): `n (max size + 2)`.
    pub fn default_search_bound(&self, records: &[PreprojectiveRecord]) -> usize {
        let max = records.iter().map(|r| r.size).max().unwrap_or(0);
        self.rank() * (max + 2)
    }

    /// `W_Θ`, the least admissible word negating every member of `theta`.
    ///
    /// All admissible words up to the search bound are scanned in order of
    /// length. The first negating word must be unique at its length and lie
    /// below every other negating word found. When the members' principal
    /// words are independent it must also equal their join.
    pub fn w_psi(
        &self,
        theta: &[RootVec],
        r_max: usize,
        bound: Option<usize>,
    ) -> Result<PsiSet, PreprojError> {
        let mut records: Vec<PreprojectiveRecord> = Vec::new();
        let mut seen = HashSet::new();
        for alpha in theta {
            let rec = self.w_alpha(alpha, r_max)?;
            if seen.insert(rec.root.grid_key()) {
                records.push(rec);
            }
        }
        records.sort_by_key(|r| (r.size, r.apex));
        let bound = bound.unwrap_or_else(|| self.default_search_bound(&records));

        let mut join = AdmissibleWord::empty(self.orientation());
        for r in &records {
            join = join.join(r.principal.word())?;
        }
        let independent = independent_decomposition(&join)?.len() == records.len();

        let roots: Vec<RootVec> = records.iter().map(|r| r.root.clone()).collect();
        let least = self.least_negating_word(&roots, bound)?;
        if independent && least != join {
            return Err(PreprojError::FormulaMismatch(format!(
                "least negating word {least} differs from the join {join}"
            )));
        }
        Ok(PsiSet {
            roots: records,
            independent,
            w_psi: least,
        })
    }

    /// Exhaustive search for the least admissible word negating all of
    /// `roots`, among words of length at most `bound`.
    pub fn least_negating_word(
        &self,
        roots: &[RootVec],
        bound: usize,
    ) -> Result<AdmissibleWord, PreprojError> {
        let system = self.system();
        let mut level: Vec<(AdmissibleWord, Vec<RootVec>)> =
            vec![(AdmissibleWord::empty(self.orientation()), roots.to_vec())];
        let mut least: Option<AdmissibleWord> = None;
        for len in 0..=bound {
            let mut found_here = Vec::new();
            for (w, images) in &level {
                let mut all_negative = true;
                for v in images {
                    if definite_sign(v)? {
                        all_negative = false;
                        break;
                    }
                }
                if all_negative {
                    found_here.push(w);
                }
            }
            match &least {
                None => match found_here.as_slice() {
                    [] => {}
                    [w] => least = Some((*w).clone()),
                    [a, b, ..] => {
                        return Err(PreprojError::FormulaMismatch(format!(
                            "two negating words {a} and {b} of minimal length {len}"
                        )))
                    }
                },
                Some(l) => {
                    for w in found_here {
                        if !l.leq(w)? {
                            return Err(PreprojError::FormulaMismatch(format!(
                                "negating word {w} is not above {l}"
                            )));
                        }
                    }
                }
            }
            if len == bound {
                break;
            }
            let mut next = Vec::new();
            let mut seen = HashSet::new();
            for (w, images) in &level {
                for v in w.end().sinks().iter() {
                    let longer = w.then(v).expect("sink");
                    if seen.insert(longer.multiplicity().to_vec()) {
                        let moved = images.iter().map(|a| system.reflect(v, a)).collect();
                        next.push((longer, moved));
                    }
                }
            }
            level = next;
        }
        least.ok_or(PreprojError::SearchBoundExceeded { bound })
    }

    /// `𝒫(c, r)` for `r = 1..=r_max`, keyed by size. Built from principal
    /// words and cross-checked against `c^{-r+1} π_x`.
    pub fn enumerate_preprojective(
        &self,
        r_max: usize,
    ) -> Result<BTreeMap<usize, Vec<PreprojectiveRecord>>, PreprojError> {
        let projective = self.projective_roots()?;
        let c_inv = self.coxeter_element().inverse();
        let mut out: BTreeMap<usize, Vec<PreprojectiveRecord>> =
            (1..=r_max).map(|r| (r, Vec::new())).collect();
        for x in 0..self.rank() {
            // u = c^{-r+1} π_x; `alive` while c^{-i} π_x > 0 for all 0 < i < r
            let mut u = projective[x].clone();
            let mut alive = true;
            let mut principal_alive = true;
            for r in 1..=r_max {
                if r > 1 {
                    u = c_inv.apply(&u);
                    alive = alive && definite_sign(&u)?;
                }
                if principal_alive {
                    let p = principal_word(r, x, self.orientation())?;
                    let beta = self.principal_root(&p);
                    principal_alive = r == 1 || definite_sign(&beta)?;
                    if principal_alive {
                        if !alive || !beta.approx_eq(&u) {
                            return Err(mismatch(
                                &format!("size {r} root from apex {}", x + 1),
                                &beta,
                                &u,
                            ));
                        }
                        out.get_mut(&r)
                            .expect("size key")
                            .push(PreprojectiveRecord {
                                root: beta,
                                size: r,
                                apex: x,
                                principal: p,
                            });
                        continue;
                    }
                }
                if alive {
                    return Err(PreprojError::FormulaMismatch(format!(
                        "c^-{} π_{} = [{u}] is positive but the principal condition fails",
                        r - 1,
                        x + 1
                    )));
                }
                break;
            }
        }
        Ok(out)
    }

    /// `Finite` when every simple root is preprojective within `r_max`.
    pub fn finiteness_probe(&self, r_max: usize) -> Result<Finiteness, PreprojError> {
        for s in 0..self.rank() {
            if self
                .preprojective_size(&self.system().simple_root(s), r_max)?
                .is_none()
            {
                return Ok(Finiteness::Unknown);
            }
        }
        Ok(Finiteness::Finite)
    }

    /// Whether every simple root is c-projective.
    pub fn order_two_check(&self) -> Result<bool, PreprojError> {
        for s in 0..self.rank() {
            if self.preprojective_size(&self.system().simple_root(s), 1)? != Some(1) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Size and generator of `alpha` by powers of `c`, by the projective
    /// roots, and by principal words, each searched independently up to `r_max`.
    pub fn size_witnesses(
        &self,
        alpha: &RootVec,
        r_max: usize,
    ) -> Result<SizeWitnesses, PreprojError> {
        let by_powers = self.preprojective_size(alpha, r_max)?;
        let projective = self.projective_roots()?;
        let c_inv = self.coxeter_element().inverse();

        let mut by_projective = None;
        'outer: for (s, pi) in projective.iter().enumerate() {
            let mut u = pi.clone();
            for r in 1..=r_max {
                if r > 1 {
                    u = c_inv.apply(&u);
                    if !definite_sign(&u)? {
                        break;
                    }
                }
                if u.approx_eq(alpha) {
                    by_projective = Some((r, s));
                    break 'outer;
                }
            }
        }

        let mut by_principal = None;
        'outer: for x in 0..self.rank() {
            for r in 1..=r_max {
                let beta = self.principal_root(&principal_word(r, x, self.orientation())?);
                if r > 1 && !definite_sign(&beta)? {
                    break;
                }
                if beta.approx_eq(alpha) {
                    by_principal = Some((r, x));
                    break 'outer;
                }
            }
        }
        Ok(SizeWitnesses {
            by_powers,
            by_projective,
            by_principal,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::admissible::enumerate;
    use crate::coxgraph::{preset, Orientation, Preset, VertexOrder};
    use crate::rootsys::RootSystem;

    fn ctx(name: &str, p: &[&str]) -> CoxeterContext {
        CoxeterContext::standard(preset(name, p).unwrap()).unwrap()
    }

    fn rv(c: &[f64]) -> RootVec {
        RootVec::new(c.to_vec())
    }

    fn w(s: &[usize]) -> TraceWord {
        TraceWord::from_written(s.iter().map(|x| x - 1).collect())
    }

    #[test]
    fn negation_examples() {
        let a2 = ctx("A", &["2"]);
        assert!(a2.negates(&w(&[1]), &rv(&[1.0, 0.0])).unwrap());
        assert!(!a2.negates(&w(&[2, 1]), &rv(&[0.0, 1.0])).unwrap());
        assert!(matches!(
            a2.negates(&w(&[1]), &rv(&[1.0, -1.0])),
            Err(PreprojError::NumericalAmbiguity(_))
        ));
        assert!(matches!(
            a2.negates(&w(&[1]), &rv(&[-1.0, 0.0])),
            Err(PreprojError::NotPositive(_))
        ));
    }

    #[test]
    fn sizes() {
        let a2 = ctx("A", &["2"]);
        assert_eq!(
            a2.preprojective_size(&rv(&[1.0, 0.0]), 10).unwrap(),
            Some(1)
        );
        assert_eq!(
            a2.preprojective_size(&rv(&[0.0, 1.0]), 10).unwrap(),
            Some(2)
        );
        assert_eq!(
            a2.preprojective_size(&rv(&[1.0, 1.0]), 10).unwrap(),
            Some(1)
        );
        let inf = ctx("I2", &["inf"]);
        assert_eq!(inf.preprojective_size(&rv(&[0.0, 1.0]), 200).unwrap(), None);
        for p in inf.projective_roots().unwrap() {
            assert_eq!(inf.preprojective_size(&p, 1).unwrap(), Some(1));
        }
    }

    #[test]
    fn projective_examples() {
        let a2 = ctx("A", &["2"]);
        let p = a2.projective_roots().unwrap();
        assert!(p[0].approx_eq(&rv(&[1.0, 0.0])));
        assert!(p[1].approx_eq(&rv(&[1.0, 1.0])));
        let inf = ctx("I2", &["inf"]);
        assert!(inf.projective_roots().unwrap()[1].approx_eq(&rv(&[2.0, 1.0])));
        let a1 = ctx("A", &["1"]);
        let img = a1.minus_c_image().unwrap();
        assert!(img[0].approx_eq(&rv(&[1.0])));
    }

    #[test]
    fn projective_formulas_on_catalog() {
        for p in Preset::catalog() {
            let rs = RootSystem::from_matrix(p.matrix().unwrap());
            for o in Orientation::all_acyclic(rs.graph()).into_iter().take(8) {
                let c = CoxeterContext::from_orientation(rs.clone(), &o).unwrap();
                let proj = c.projective_roots().unwrap();
                for s in c.orientation().sinks().iter() {
                    assert!(proj[s].approx_eq(&rs.simple_root(s)));
                }
                c.minus_c_image().unwrap();
            }
        }
    }

    #[test]
    fn w_alpha_examples() {
        let a2 = ctx("A", &["2"]);
        let r = a2.w_alpha(&rv(&[0.0, 1.0]), 10).unwrap();
        assert_eq!((r.size, r.apex), (2, 0));
        assert_eq!(r.principal.word().word().written(), &[0, 1, 0]);
        let r = a2.w_alpha(&rv(&[1.0, 0.0]), 10).unwrap();
        assert_eq!((r.size, r.apex), (1, 0));
        assert_eq!(r.principal.word().word().written(), &[0]);

        let inf = ctx("I2", &["inf"]);
        let r = inf.w_alpha(&rv(&[3.0, 2.0]), 10).unwrap();
        assert_eq!((r.size, r.apex), (2, 0));
        assert_eq!(r.principal.word().word().written(), &[0, 1, 0]);
        assert!(matches!(
            inf.w_alpha(&rv(&[0.0, 1.0]), 30),
            Err(PreprojError::NotPreprojectiveWithinBound { .. })
        ));
    }

    #[test]
    fn w_alpha_is_least_negating_word() {
        let a2 = ctx("A", &["2"]);
        let alpha = rv(&[0.0, 1.0]);
        let r = a2.w_alpha(&alpha, 10).unwrap();
        let negating: Vec<AdmissibleWord> = enumerate(a2.orientation(), 4)
            .into_iter()
            .filter(|x| a2.negates(x.word(), &alpha).unwrap())
            .collect();
        assert!(negating.iter().all(|x| r.principal.word().leq(x).unwrap()));
        assert!(negating.contains(r.principal.word()));
    }

    #[test]
    fn w_psi_examples() {
        let a2 = ctx("A", &["2"]);
        let psi = a2
            .w_psi(&[rv(&[1.0, 0.0]), rv(&[0.0, 1.0])], 10, None)
            .unwrap();
        assert_eq!(psi.w_psi.word().written(), &[0, 1, 0]);
        assert!(!psi.independent);
        let single = a2.w_psi(&[rv(&[0.0, 1.0])], 10, None).unwrap();
        assert_eq!(single.w_psi.word().written(), &[0, 1, 0]);
        assert!(single.independent);
        let empty = a2.w_psi(&[], 10, None).unwrap();
        assert!(empty.w_psi.is_empty());

        // v1 <- v2 -> v3 with W_Θ = v3 v1 for Θ = {α1, α3}
        let rs = RootSystem::from_matrix(preset("A", &["3"]).unwrap());
        let o = Orientation::from_arrows(rs.graph(), &[(1, 0), (1, 2)]).unwrap();
        let a3 = CoxeterContext::from_orientation(rs, &o).unwrap();
        let psi = a3
            .w_psi(&[rv(&[1.0, 0.0, 0.0]), rv(&[0.0, 0.0, 1.0])], 20, None)
            .unwrap();
        assert!(psi.independent);
        assert_eq!(psi.w_psi.word().multiplicity(3), vec![1, 0, 1]);
        assert!(matches!(
            a3.w_psi(&[rv(&[1.0, 0.0, 0.0]), rv(&[0.0, 0.0, 1.0])], 20, Some(1)),
            Err(PreprojError::SearchBoundExceeded { bound: 1 })
        ));
    }

    #[test]
    fn enumeration_examples() {
        let a2 = ctx("A", &["2"]);
        let e = a2.enumerate_preprojective(3).unwrap();
        let roots = |r: usize| e[&r].iter().map(|x| x.root.to_string()).collect::<Vec<_>>();
        assert_eq!(roots(1), vec!["1 0", "1 1"]);
        assert_eq!(roots(2), vec!["0 1"]);
        assert!(roots(3).is_empty());

        let inf = ctx("I2", &["inf"]);
        let e = inf.enumerate_preprojective(5).unwrap();
        for r in 1..=5 {
            let expect: Vec<String> = [2 * r - 2, 2 * r - 1]
                .iter()
                .map(|&k| format!("{} {}", k + 1, k))
                .collect();
            let mut got = roots_of(&e[&r]);
            got.sort();
            let mut expect = expect;
            expect.sort();
            assert_eq!(got, expect, "size {r}");
        }
    }

    fn roots_of(recs: &[PreprojectiveRecord]) -> Vec<String> {
        recs.iter().map(|x| x.root.to_string()).collect()
    }

    #[test]
    fn finiteness() {
        assert_eq!(
            ctx("A", &["2"]).finiteness_probe(2).unwrap(),
            Finiteness::Finite
        );
        assert_eq!(
            ctx("I2", &["inf"]).finiteness_probe(50).unwrap(),
            Finiteness::Unknown
        );
        assert_eq!(
            ctx("affine-A", &["2"]).finiteness_probe(20).unwrap(),
            Finiteness::Unknown
        );
        assert!(ctx("A", &["1"]).order_two_check().unwrap());
        assert!(!ctx("A", &["2"]).order_two_check().unwrap());
        let a3 = ctx("A", &["3"]);
        assert_eq!(a3.default_r_max(), 24);
    }

    #[test]
    fn witnesses_agree() {
        let a3 = CoxeterContext::from_matrix(
            preset("A", &["3"]).unwrap(),
            VertexOrder::new(vec![1, 0, 2]).unwrap(),
        )
        .unwrap();
        for recs in a3.enumerate_preprojective(4).unwrap().values() {
            for rec in recs {
                let wit = a3.size_witnesses(&rec.root, 10).unwrap();
                assert_eq!(wit.by_powers, Some(rec.size));
                assert_eq!(wit.by_projective, Some((rec.size, rec.apex)));
                assert_eq!(wit.by_principal, Some((rec.size, rec.apex)));
            }
        }
    }
}
