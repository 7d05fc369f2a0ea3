//! The Anick resolution `… → K C₂ ⊗ A → K C₁ ⊗ A → A → K` of the trivial
//! right module, with its contracting homotopy.
//!
//! `A` is represented by normal words: every product is reduced at once.
//! Differentials are cached per basis chain and extended to arbitrary
//! elements by right multiplication.

mod element;

pub use element::{ModuleElement, ModuleElementRecord, TensorTerm, TermRecord};

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::chains::{build_chain_graph, obstructions, Chain, ChainGraph};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::groebner::{GroebnerCheck, RewriteSystem};
use crate::poly::Polynomial;
use crate::presentation::Presentation;
use crate::word::Word;

/// Upper bound on leading-term eliminations in one homotopy call.
pub const MAX_HOMOTOPY_STEPS: usize = 1_000_000;

/// Result of checking `d_{n-1} ∘ d_n = 0` on every basis chain of degree `n`.
/// Degree 1 checks `ε ∘ d₁ = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeCheck {
    pub degree: usize,
    pub chains: usize,
    /// Chain words whose composite is nonzero.
    pub failures: Vec<String>,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexReport {
    pub degrees: Vec<DegreeCheck>,
}

impl ComplexReport {
    pub fn is_ok(&self) -> bool {
        self.degrees.iter().all(|d| d.failures.is_empty())
    }
}

/// The scalar matrix of `K ⊗_A d_n`: `entries[i][j]` is the coefficient of
/// `rows[i]` in `ε` applied to the tails of `d_n(cols[j] ⊗ 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagnosticMatrix {
    pub degree: usize,
    pub rows: Vec<Word>,
    pub cols: Vec<Word>,
    pub entries: Vec<Vec<FieldElement>>,
}

impl DiagnosticMatrix {
    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(FieldElement::is_zero)
    }
}

#[derive(Debug, Clone)]
pub struct ResolutionEngine {
    pres: Presentation,
    rs: RewriteSystem,
    graph: ChainGraph,
    chains: Vec<Vec<Arc<Chain>>>,
    interned: HashMap<(usize, Word), Arc<Chain>>,
    normal_forms: HashMap<Word, Polynomial>,
    differentials: HashMap<(usize, Word), ModuleElement>,
    homotopies: HashMap<ModuleElement, ModuleElement>,
}

impl ResolutionEngine {
    /// `rs` must be a minimal Gröbner basis of the ideal of `pres`; every
    /// ambiguity is checked here.
    pub fn new(pres: &Presentation, rs: RewriteSystem) -> Result<Self> {
        let obs = obstructions(&rs)?;
        if let GroebnerCheck::Failed(cx) = rs.check_groebner(rs.max_overlap_degree().max(rs.max_rule_degree()))? {
            return Err(Error::NotGroebner { word: rs.alphabet().format_word(&cx.overlap.word) });
        }
        let graph = build_chain_graph(&obs, rs.alphabet());
        Ok(ResolutionEngine {
            pres: pres.clone(),
            rs,
            graph,
            chains: Vec::new(),
            interned: HashMap::new(),
            normal_forms: HashMap::new(),
            differentials: HashMap::new(),
            homotopies: HashMap::new(),
        })
    }

    /// Uses the relations themselves as the Gröbner basis.
    pub fn from_presentation(pres: &Presentation) -> Result<Self> {
        ResolutionEngine::new(pres, RewriteSystem::from_presentation(pres)?)
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn rewrite_system(&self) -> &RewriteSystem {
        &self.rs
    }

    pub fn graph(&self) -> &ChainGraph {
        &self.graph
    }

    /// Basis chains of degree `n`, descending.
    pub fn chains(&mut self, n: usize) -> Vec<Arc<Chain>> {
        while self.chains.len() <= n {
            let d = self.chains.len();
            let layer: Vec<Arc<Chain>> = self
                .graph
                .chains(d, self.rs.order())
                .into_iter()
                .map(|c| self.intern(c))
                .collect();
            self.chains.push(layer);
        }
        self.chains[n].clone()
    }

    fn intern(&mut self, c: Chain) -> Arc<Chain> {
        self.interned
            .entry((c.degree(), c.word().clone()))
            .or_insert_with(|| Arc::new(c))
            .clone()
    }

    /// The chain of degree `n` with the given word.
    pub fn chain(&mut self, n: usize, word: &Word) -> Result<Arc<Chain>> {
        self.chains(n);
        self.interned.get(&(n, word.clone())).cloned().ok_or_else(|| {
            Error::UnknownChain(self.pres.alphabet().format_word(word))
        })
    }

    fn root(&mut self) -> Arc<Chain> {
        self.intern(Chain::root())
    }

    pub fn normal_form(&mut self, w: &Word) -> Polynomial {
        if let Some(p) = self.normal_forms.get(w) {
            return p.clone();
        }
        let p = self.rs.normal_form_of_word(w);
        self.normal_forms.insert(w.clone(), p.clone());
        p
    }

    fn one(&self) -> FieldElement {
        self.pres.field().one()
    }

    /// `c ⊗ s̄` with coefficient 1, reducing `s` first.
    pub fn basis_element(&mut self, chain: Arc<Chain>, tail: &Word) -> ModuleElement {
        let mut out = ModuleElement::zero(chain.degree());
        for (w, c) in self.normal_form(tail).into_terms() {
            out.add_term(self.rs.order(), TensorTerm::new(chain.clone(), w), c);
        }
        out
    }

    /// An element of `A` as a degree-0 module element.
    pub fn algebra_element(&mut self, p: &Polynomial) -> ModuleElement {
        let root = self.root();
        let nf = self.rs.normal_form(p);
        let mut out = ModuleElement::zero(0);
        for (w, c) in nf.into_terms() {
            out.add_term(self.rs.order(), TensorTerm::new(root.clone(), w), c);
        }
        out
    }

    /// Compares `c₁ ⊗ s₁` with `c₂ ⊗ s₂` through the words `c₁s₁`, `c₂s₂`.
    pub fn basis_compare(&self, a: &TensorTerm, b: &TensorTerm) -> Ordering {
        self.rs.order().compare(&a.concat(), &b.concat())
    }

    /// Leading word, term and coefficient.
    pub fn module_lm<'a>(
        &self,
        v: &'a ModuleElement,
    ) -> Result<(Word, &'a TensorTerm, &'a FieldElement)> {
        let (t, c) = v.leading_term().ok_or(Error::ZeroElement)?;
        Ok((t.concat(), t, c))
    }

    /// `Σ λ c·s` in the free algebra.
    pub fn flatten(&self, v: &ModuleElement) -> Polynomial {
        v.terms().map(|(t, c)| (t.concat(), c.clone())).collect()
    }

    /// Right action of a word.
    pub fn act(&mut self, v: &ModuleElement, w: &Word) -> ModuleElement {
        let mut out = ModuleElement::zero(v.degree());
        self.add_acted(&mut out, &self.one(), v, w);
        out
    }

    /// `out += scale · v · w`
    fn add_acted(&mut self, out: &mut ModuleElement, scale: &FieldElement, v: &ModuleElement, w: &Word) {
        for (t, c) in v.terms() {
            let coeff = scale * c;
            for (u, a) in self.normal_form(&t.tail.concat(w)).into_terms() {
                out.add_term(self.rs.order(), TensorTerm::new(t.chain.clone(), u), &coeff * &a);
            }
        }
    }

    /// Right action of an algebra element.
    pub fn act_poly(&mut self, v: &ModuleElement, p: &Polynomial) -> ModuleElement {
        let mut out = ModuleElement::zero(v.degree());
        for (w, c) in p.terms() {
            self.add_acted(&mut out, c, v, w);
        }
        out
    }

    /// `ε` on a degree-0 element.
    pub fn augmentation(&self, v: &ModuleElement) -> FieldElement {
        v.terms()
            .fold(self.pres.field().zero(), |acc, (t, c)| &acc + &(c * &self.pres.eval_word(&t.tail)))
    }

    /// `d₁(x ⊗ s̄) = x̄s̄ - ε(x)s̄`, extended linearly.
    pub fn d1(&mut self, v: &ModuleElement) -> ModuleElement {
        assert_eq!(v.degree(), 1, "d1 takes degree-1 elements");
        let root = self.root();
        let mut out = ModuleElement::zero(0);
        for (t, c) in v.terms() {
            let x = t.chain.word().clone();
            for (u, a) in self.normal_form(&x.concat(&t.tail)).into_terms() {
                out.add_term(self.rs.order(), TensorTerm::new(root.clone(), u), c * &a);
            }
            let eps = self.pres.eval_word(&x);
            out.add_term(self.rs.order(), TensorTerm::new(root.clone(), t.tail.clone()), -&(c * &eps));
        }
        out
    }

    /// `i₀(s̄ - ε(s)) = Σⱼ ε(x₁⋯xⱼ₋₁) xⱼ ⊗ x̄ⱼ₊₁⋯x̄ₗ`, extended linearly.
    pub fn i0(&mut self, v: &ModuleElement) -> Result<ModuleElement> {
        assert_eq!(v.degree(), 0, "i0 takes degree-0 elements");
        let eps = self.augmentation(v);
        if !eps.is_zero() {
            return Err(Error::NotInKernel(format!(
                "ε({}) = {eps}",
                v.format(self.pres.alphabet())
            )));
        }
        let mut out = ModuleElement::zero(1);
        for (t, c) in v.terms() {
            let s = &t.tail;
            let mut prefix_eps = self.one();
            for j in 0..s.len() {
                if !prefix_eps.is_zero() {
                    let x = self.chain(1, &s.slice(j..j + 1))?;
                    out.add_term(
                        self.rs.order(),
                        TensorTerm::new(x, s.suffix_from(j + 1)),
                        c * &prefix_eps,
                    );
                }
                prefix_eps = &prefix_eps * &self.pres.eval_word(&s.slice(j..j + 1));
            }
        }
        Ok(out)
    }

    /// `d_n(c ⊗ 1)` for a chain of degree `n ≥ 1`, cached.
    pub fn differential(&mut self, c: &Arc<Chain>) -> Result<ModuleElement> {
        let n = c.degree();
        if n == 0 {
            return Err(Error::OutOfRange { index: 0, max: 0 });
        }
        let key = (n, c.word().clone());
        if let Some(d) = self.differentials.get(&key) {
            return Ok(d.clone());
        }
        let value = if n == 1 {
            let mut unit = ModuleElement::zero(1);
            unit.add_term(self.rs.order(), TensorTerm::new(c.clone(), Word::empty()), self.one());
            self.d1(&unit)
        } else {
            // c'⊗t - i_{n-2}(d_{n-1}(c'⊗t))
            let (prefix, t) = c.split()?;
            let prefix = self.intern(prefix);
            let lead = self.basis_element(prefix.clone(), &t);
            let image = self.apply_d(&lead)?;
            let correction = self.contract(&image)?;
            let mut out = lead;
            out.add_scaled(&-&self.one(), &correction);
            out
        };
        self.differentials.insert(key, value.clone());
        Ok(value)
    }

    /// `d_n` on an arbitrary degree-`n` element, `n ≥ 1`.
    pub fn apply_d(&mut self, v: &ModuleElement) -> Result<ModuleElement> {
        let n = v.degree();
        if n == 0 {
            return Err(Error::OutOfRange { index: 0, max: 0 });
        }
        if n == 1 {
            return Ok(self.d1(v));
        }
        let mut out = ModuleElement::zero(n - 1);
        for (t, c) in v.terms() {
            let d = self.differential(&t.chain)?;
            self.add_acted(&mut out, c, &d, &t.tail);
        }
        Ok(out)
    }

    /// `i₀` or `i_n` according to the degree of `v`.
    pub fn contract(&mut self, v: &ModuleElement) -> Result<ModuleElement> {
        if v.degree() == 0 {
            self.i0(v)
        } else {
            self.homotopy(v)
        }
    }

    fn check_kernel(&mut self, v: &ModuleElement) -> Result<()> {
        let image = self.apply_d(v)?;
        if image.is_zero() {
            Ok(())
        } else {
            Err(Error::NotInKernel(format!(
                "d({}) = {}",
                v.format(self.pres.alphabet()),
                image.format(self.pres.alphabet())
            )))
        }
    }

    /// The contracting homotopy `i_n` on `v ∈ ker d_n`, `n ≥ 1`.
    ///
    /// Repeatedly removes the leading term `λ c₀ ⊗ s₀`: the leftmost
    /// obstruction of `w·s₀` (`w` the last node of `c₀`) extends `c₀` to a
    /// chain `c` with `c₀s₀ = c·t`, and `λ d(c ⊗ t̄)` is subtracted.
    pub fn homotopy(&mut self, v: &ModuleElement) -> Result<ModuleElement> {
        let n = v.degree();
        if n == 0 {
            return self.i0(v);
        }
        if let Some(h) = self.homotopies.get(v) {
            return Ok(h.clone());
        }
        self.check_kernel(v)?;
        let mut out = ModuleElement::zero(n + 1);
        let mut rest = v.clone();
        let mut steps = 0;
        while let Some((t0, lambda)) = rest.leading_term() {
            steps += 1;
            if steps > MAX_HOMOTOPY_STEPS {
                return Err(Error::NonTermination {
                    steps,
                    element: v.format(self.pres.alphabet()),
                });
            }
            let (t0, lambda) = (t0.clone(), lambda.clone());
            let (c, t) = self.extend_leading(&t0)?;
            out.add_term(self.rs.order(), TensorTerm::new(c.clone(), t.clone()), lambda.clone());
            let d = self.differential(&c)?;
            let mut next = rest;
            self.add_acted(&mut next, &-&lambda, &d, &t);
            debug_assert!(
                next.leading_term().is_none_or(|(l, _)| self.basis_compare(l, &t0).is_lt()),
                "leading term did not decrease"
            );
            if cfg!(debug_assertions) {
                self.check_kernel(&next)?;
            }
            rest = next;
        }
        self.homotopies.insert(v.clone(), out.clone());
        Ok(out)
    }

    /// `(c, t)` with `c` of degree `n + 1` and `c·t = c₀·s₀`.
    fn extend_leading(&mut self, t0: &TensorTerm) -> Result<(Arc<Chain>, Word)> {
        let last = t0.chain.last_node().clone();
        let r0 = last.concat(&t0.tail);
        let occ = self.graph.obstructions().occurrences_in(&r0);
        let not_kernel = || {
            Error::NotInKernel(format!(
                "leading term [{} | {}] cannot be lifted",
                self.pres.alphabet().format_word(t0.chain.word()),
                self.pres.alphabet().format_word(&t0.tail)
            ))
        };
        let &(start, end) = occ.first().ok_or_else(not_kernel)?;
        if start >= last.len().max(1) || end <= last.len() {
            return Err(not_kernel());
        }
        let node = r0.slice(last.len()..end);
        let tail = r0.suffix_from(end);
        let c = self.graph.extend(&t0.chain, &node).ok_or_else(not_kernel)?;
        Ok((self.intern(c), tail))
    }

    /// Checks `d_{n-1} ∘ d_n = 0` on every chain of degree `1..=max_degree`.
    pub fn verify_complex(&mut self, max_degree: usize) -> Result<ComplexReport> {
        let mut degrees = Vec::new();
        for n in 1..=max_degree {
            let start = Instant::now();
            let chains = self.chains(n);
            let mut failures = Vec::new();
            for c in &chains {
                let d = self.differential(c)?;
                let zero = if n == 1 {
                    self.augmentation(&d).is_zero()
                } else {
                    self.apply_d(&d)?.is_zero()
                };
                if !zero {
                    failures.push(self.pres.alphabet().format_word(c.word()));
                }
            }
            degrees.push(DegreeCheck {
                degree: n,
                chains: chains.len(),
                failures,
                elapsed: start.elapsed(),
            });
        }
        Ok(ComplexReport { degrees })
    }

    /// `K ⊗_A d_n` for `n` in `1..=max_degree`. A nonzero matrix shows the
    /// resolution is not minimal in that degree.
    pub fn minimality_diagnostic(&mut self, max_degree: usize) -> Result<Vec<DiagnosticMatrix>> {
        let mut out = Vec::new();
        for n in 1..=max_degree {
            let rows = self.chains(n - 1);
            let cols = self.chains(n);
            let row_index: HashMap<Word, usize> =
                rows.iter().enumerate().map(|(i, c)| (c.word().clone(), i)).collect();
            let zero = self.pres.field().zero();
            let mut entries = vec![vec![zero; cols.len()]; rows.len()];
            for (j, c) in cols.iter().enumerate() {
                let d = self.differential(c)?;
                for (t, coeff) in d.terms() {
                    let i = row_index[t.chain.word()];
                    let add = coeff * &self.pres.eval_word(&t.tail);
                    entries[i][j] = &entries[i][j] + &add;
                }
            }
            out.push(DiagnosticMatrix {
                degree: n,
                rows: rows.iter().map(|c| c.word().clone()).collect(),
                cols: cols.iter().map(|c| c.word().clone()).collect(),
                entries,
            });
        }
        Ok(out)
    }

    pub fn format(&self, v: &ModuleElement) -> String {
        v.format(self.pres.alphabet())
    }

    pub fn to_record(&self, v: &ModuleElement) -> ModuleElementRecord {
        let a = self.pres.alphabet();
        ModuleElementRecord {
            degree: v.degree(),
            terms: v
                .terms()
                .map(|(t, c)| TermRecord {
                    chain: a.format_word(t.chain.word()),
                    tail: a.format_word(&t.tail),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_record(&mut self, rec: &ModuleElementRecord) -> Result<ModuleElement> {
        let mut out = ModuleElement::zero(rec.degree);
        for t in &rec.terms {
            let word = self.pres.word(&t.chain)?;
            let chain = if rec.degree == 0 { self.root() } else { self.chain(rec.degree, &word)? };
            let tail = self.pres.word(&t.tail)?;
            let coeff = self.pres.field().parse(&t.coeff)?;
            let mut part = self.basis_element(chain, &tail);
            part = part.scaled(&coeff);
            out.add_scaled(&self.one(), &part);
        }
        Ok(out)
    }
}
