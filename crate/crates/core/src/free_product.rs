//! Words in the free product `G + B`, the split extension `L(E)` with middle
//! object `G + B`, and the presentation `<G x B | R>` of the kernel of the
//! fold map `<f, 1_B>: G + B -> B`.
//!
//! A generator `(g, b)` of the presentation stands for the word
//! `b g (b f(g))^{-1}`. The relations are `(1, b) = 1` and
//! `(g, b)(g', b f(g)) = (g g', b)`; both shorten a word, so rewriting them
//! left to right terminates.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result, Square};
use crate::extensions::{check_morphism, ExtMorphism, Extension, SplitExtension};
use crate::group::{FiniteGroup, GroupHom, GroupRef};

pub const DEFAULT_MAX_WORD_LEN: usize = 8;
pub const DEFAULT_MAX_PRES_GENS: usize = 6;
pub const DEFAULT_WORD_BUDGET: u128 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Factor {
    G,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub factor: Factor,
    pub index: usize,
}

impl Letter {
    pub fn g(index: usize) -> Self {
        Self {
            factor: Factor::G,
            index,
        }
    }

    pub fn b(index: usize) -> Self {
        Self {
            factor: Factor::B,
            index,
        }
    }
}

/// A word in `G + B`; not necessarily reduced.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpWord {
    pub letters: Vec<Letter>,
}

impl FpWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self { letters }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &FpWord) -> FpWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        FpWord { letters }
    }
}

impl fmt::Display for FpWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| match l.factor {
                Factor::G => format!("g:{}", l.index),
                Factor::B => format!("b:{}", l.index),
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl Serialize for FpWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for FpWord {
    type Err = Error;

    /// Tokens `g:IDX` / `b:IDX` separated by whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .split_whitespace()
            .map(|tok| {
                let (tag, idx) = tok
                    .split_once(':')
                    .ok_or_else(|| Error::Parse(format!("bad letter {tok:?}")))?;
                let index = idx.parse().map_err(|_| Error::Parse(format!("bad index in {tok:?}")))?;
                match tag {
                    "g" => Ok(Letter::g(index)),
                    "b" => Ok(Letter::b(index)),
                    _ => Err(Error::Parse(format!("unknown factor in {tok:?}"))),
                }
            })
            .collect::<Result<_>>()?;
        Ok(FpWord { letters })
    }
}

/// A word in the generators `G x B` of the kernel presentation.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PresWord {
    /// Pairs `(g, b)`.
    pub gens: Vec<(usize, usize)>,
}

impl PresWord {
    pub fn new(gens: Vec<(usize, usize)>) -> Self {
        Self { gens }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn concat(&self, other: &PresWord) -> PresWord {
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        PresWord { gens }
    }
}

impl fmt::Display for PresWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|(g, b)| format!("({g},{b})")).collect();
        f.write_str(&parts.join(" "))
    }
}

impl Serialize for PresWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for PresWord {
    type Err = Error;

    /// Whitespace-separated `(g,b)` tokens.
    fn from_str(s: &str) -> Result<Self> {
        let gens = s
            .split_whitespace()
            .map(|tok| {
                let inner = tok
                    .strip_prefix('(')
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(|| Error::Parse(format!("bad generator {tok:?}")))?;
                let (g, b) = inner
                    .split_once(',')
                    .ok_or_else(|| Error::Parse(format!("bad generator {tok:?}")))?;
                let parse = |x: &str| {
                    x.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad index in {tok:?}")))
                };
                Ok((parse(g)?, parse(b)?))
            })
            .collect::<Result<_>>()?;
        Ok(PresWord { gens })
    }
}

/// The free product `G + B` as a word-arithmetic context.
#[derive(Debug, Clone)]
pub struct FreeProduct {
    g: GroupRef,
    b: GroupRef,
}

impl FreeProduct {
    pub fn new(g: &GroupRef, b: &GroupRef) -> Self {
        Self {
            g: g.clone(),
            b: b.clone(),
        }
    }

    pub fn g(&self) -> &GroupRef {
        &self.g
    }

    pub fn b(&self) -> &GroupRef {
        &self.b
    }

    fn factor_group(&self, factor: Factor) -> &FiniteGroup {
        match factor {
            Factor::G => &self.g,
            Factor::B => &self.b,
        }
    }

    pub fn check_letters(&self, w: &FpWord) -> Result<()> {
        for l in &w.letters {
            if l.index >= self.factor_group(l.factor).order() {
                return Err(Error::Parse(format!("letter index {} out of range", l.index)));
            }
        }
        Ok(())
    }

    /// Merges adjacent letters from the same factor and deletes identities.
    /// The result alternates between factors and has no identity letters.
    pub fn reduce(&self, w: &FpWord) -> FpWord {
        let mut out: Vec<Letter> = Vec::with_capacity(w.len());
        for &l in &w.letters {
            if l.index == 0 {
                continue;
            }
            match out.last_mut() {
                Some(top) if top.factor == l.factor => {
                    let merged = self.factor_group(l.factor).mul(top.index, l.index);
                    if merged == 0 {
                        out.pop();
                    } else {
                        top.index = merged;
                    }
                }
                _ => out.push(l),
            }
        }
        FpWord { letters: out }
    }

    pub fn mul(&self, x: &FpWord, y: &FpWord) -> FpWord {
        self.reduce(&x.concat(y))
    }

    pub fn inv(&self, w: &FpWord) -> FpWord {
        FpWord {
            letters: w
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    factor: l.factor,
                    index: self.factor_group(l.factor).inv(l.index),
                })
                .collect(),
        }
    }

    /// The shape `b_1 g_1 ... b_n g_n` of a word, where `b_1` and `g_n` may be
    /// the identity. The word is reduced first.
    pub fn canonical_pairs(&self, w: &FpWord) -> Vec<(usize, usize)> {
        let w = self.reduce(w);
        let mut pairs = Vec::new();
        let mut pending_b: Option<usize> = None;
        for l in &w.letters {
            match l.factor {
                Factor::B => pending_b = Some(l.index),
                Factor::G => pairs.push((pending_b.take().unwrap_or(0), l.index)),
            }
        }
        if let Some(b) = pending_b {
            pairs.push((b, 0));
        }
        pairs
    }

    /// Every reduced word of length at most `maxlen`, shortest first.
    pub fn reduced_words(&self, maxlen: usize, budget: u128) -> Result<Vec<FpWord>> {
        let (ng, nb) = ((self.g.order() - 1) as u128, (self.b.order() - 1) as u128);
        let mut needed: u128 = 1;
        for len in 1..=maxlen as u32 {
            let half = len / 2;
            let other = len - half;
            let count = ng.saturating_pow(half).saturating_mul(nb.saturating_pow(other))
                + nb.saturating_pow(half).saturating_mul(ng.saturating_pow(other));
            needed = needed.saturating_add(count);
        }
        if needed > budget {
            return Err(Error::BudgetExceeded {
                what: "reduced words",
                needed,
                budget,
            });
        }
        let mut out = vec![FpWord::empty()];
        let mut frontier = vec![FpWord::empty()];
        for _ in 0..maxlen {
            let mut next = Vec::new();
            for w in &frontier {
                for factor in [Factor::G, Factor::B] {
                    if w.letters.last().map(|l| l.factor) == Some(factor) {
                        continue;
                    }
                    for index in 1..self.factor_group(factor).order() {
                        let mut letters = w.letters.clone();
                        letters.push(Letter { factor, index });
                        next.push(FpWord { letters });
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        Ok(out)
    }
}

/// Multiplies the images of the letters of `w` under `u: G -> H` and
/// `v: B -> H`, left to right.
pub fn copair_eval(u: &GroupHom, v: &GroupHom, w: &FpWord) -> usize {
    let h = u.codomain();
    w.letters.iter().fold(0, |acc, l| {
        let img = match l.factor {
            Factor::G => u.apply(l.index),
            Factor::B => v.apply(l.index),
        };
        h.mul(acc, img)
    })
}

pub fn reduce_word(fp: &FreeProduct, w: &FpWord) -> FpWord {
    fp.reduce(w)
}

/// Arithmetic for `L(E)`: middle object `G + B`, retraction `<f, 1_B>`,
/// splitting `iota_2`, and the kernel in presentation form.
#[derive(Debug, Clone)]
pub struct LExtension {
    e: Extension,
    fp: FreeProduct,
    id_b: GroupHom,
}

pub fn l_of_extension(e: &Extension) -> LExtension {
    LExtension {
        e: e.clone(),
        fp: FreeProduct::new(e.g(), e.b()),
        id_b: GroupHom::identity(e.b()),
    }
}

impl LExtension {
    pub fn extension(&self) -> &Extension {
        &self.e
    }

    pub fn free_product(&self) -> &FreeProduct {
        &self.fp
    }

    /// `<f, 1_B>`.
    pub fn fold(&self, w: &FpWord) -> usize {
        copair_eval(self.e.f(), &self.id_b, w)
    }

    pub fn in_kernel(&self, w: &FpWord) -> bool {
        self.fold(w) == 0
    }

    pub fn iota1(&self, g: usize) -> FpWord {
        self.fp.reduce(&FpWord::new(vec![Letter::g(g)]))
    }

    pub fn iota2(&self, b: usize) -> FpWord {
        self.fp.reduce(&FpWord::new(vec![Letter::b(b)]))
    }

    /// Reduced kernel words of length at most `maxlen`.
    pub fn kernel_words(&self, maxlen: usize) -> Result<Vec<FpWord>> {
        Ok(self
            .fp
            .reduced_words(maxlen, DEFAULT_WORD_BUDGET)?
            .into_iter()
            .filter(|w| self.in_kernel(w))
            .collect())
    }

    /// Applies the two relations, leftmost redex first, until none applies.
    pub fn normal_form(&self, p: &PresWord) -> PresWord {
        let (g, b, f) = (self.e.g(), self.e.b(), self.e.f());
        let mut gens = p.gens.clone();
        'rewrite: loop {
            for i in 0..gens.len() {
                if gens[i].0 == 0 {
                    gens.remove(i);
                    continue 'rewrite;
                }
                if i + 1 < gens.len() {
                    let (gi, bi) = gens[i];
                    let (gj, bj) = gens[i + 1];
                    if bj == b.mul(bi, f.apply(gi)) {
                        gens[i] = (g.mul(gi, gj), bi);
                        gens.remove(i + 1);
                        continue 'rewrite;
                    }
                }
            }
            return PresWord { gens };
        }
    }

    pub fn is_normal(&self, p: &PresWord) -> bool {
        self.normal_form(p) == *p
    }

    /// The map `(g, b) -> b g (b f(g))^{-1}`, reduced.
    pub fn pres_to_word(&self, p: &PresWord) -> FpWord {
        let (b, f) = (self.e.b(), self.e.f());
        let mut letters = Vec::with_capacity(3 * p.len());
        for &(gi, bi) in &p.gens {
            letters.push(Letter::b(bi));
            letters.push(Letter::g(gi));
            letters.push(Letter::b(b.inv(b.mul(bi, f.apply(gi)))));
        }
        self.fp.reduce(&FpWord { letters })
    }

    /// The inverse map: reads `b_1 g_1 ... b_n g_n` and emits the generators
    /// `(g_i, b_1 f(g_1) ... b_{i-1} f(g_{i-1}) b_i)`, then normalizes.
    pub fn word_to_pres(&self, w: &FpWord) -> Result<PresWord> {
        if !self.in_kernel(w) {
            return Err(Error::NotInKernel);
        }
        let (b, f) = (self.e.b(), self.e.f());
        let mut prefix = 0;
        let mut gens = Vec::new();
        for (bi, gi) in self.fp.canonical_pairs(w) {
            prefix = b.mul(prefix, bi);
            gens.push((gi, prefix));
            prefix = b.mul(prefix, f.apply(gi));
        }
        Ok(self.normal_form(&PresWord { gens }))
    }

    /// Product in `KL(E)`.
    pub fn kernel_mul(&self, x: &PresWord, y: &PresWord) -> PresWord {
        self.normal_form(&x.concat(y))
    }

    /// Kernel component of the unit `lambda_E`: `a -> k(a)` as a one-letter word.
    pub fn lambda_a(&self, a: usize) -> PresWord {
        self.word_to_pres(&self.iota1(self.e.k().apply(a)))
            .expect("k(a) lies in the kernel of the fold")
    }

    /// Every presentation word with at most `max_gens` generators.
    pub fn pres_words(&self, max_gens: usize, budget: u128) -> Result<Vec<PresWord>> {
        let n = self.e.g().order() * self.e.b().order();
        let needed: u128 = (0..=max_gens as u32).map(|k| (n as u128).saturating_pow(k)).sum();
        if needed > budget {
            return Err(Error::BudgetExceeded {
                what: "presentation words",
                needed,
                budget,
            });
        }
        let nb = self.e.b().order();
        let mut out = vec![PresWord::empty()];
        let mut frontier = vec![PresWord::empty()];
        for _ in 0..max_gens {
            let mut next = Vec::new();
            for p in &frontier {
                for x in 0..n {
                    let mut gens = p.gens.clone();
                    gens.push((x / nb, x % nb));
                    next.push(PresWord { gens });
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        Ok(out)
    }
}

pub fn in_kernel(e: &Extension, w: &FpWord) -> bool {
    l_of_extension(e).in_kernel(w)
}

pub fn enumerate_kernel_words(e: &Extension, maxlen: usize) -> Result<Vec<FpWord>> {
    l_of_extension(e).kernel_words(maxlen)
}

pub fn pres_normal_form(e: &Extension, p: &PresWord) -> PresWord {
    l_of_extension(e).normal_form(p)
}

pub fn pres_to_word(e: &Extension, p: &PresWord) -> FpWord {
    l_of_extension(e).pres_to_word(p)
}

pub fn word_to_pres(e: &Extension, w: &FpWord) -> Result<PresWord> {
    l_of_extension(e).word_to_pres(w)
}

/// A morphism of split extensions `L(E) -> S`. Its middle map `G + B -> H`
/// is the copairing `<phi_G, t>`, so it is determined by `phi_G`.
#[derive(Debug, Clone)]
pub struct LTranspose {
    l: LExtension,
    target: SplitExtension,
    phi_g: GroupHom,
}

impl LTranspose {
    pub fn phi_g(&self) -> &GroupHom {
        &self.phi_g
    }

    pub fn target(&self) -> &SplitExtension {
        &self.target
    }

    /// `<phi_G, t>(w)`.
    pub fn middle(&self, w: &FpWord) -> usize {
        copair_eval(&self.phi_g, self.target.s(), w)
    }

    /// The kernel component `KL(E) -> C`.
    pub fn kernel(&self, p: &PresWord) -> Result<usize> {
        let value = self.middle(&self.l.pres_to_word(p));
        self.target
            .ext()
            .pull_back(value)
            .ok_or(Error::ValueOutsideKernel { point: 0, value })
    }

    /// Checks the right square and the section square on every reduced word
    /// of length at most `maxlen`, and that kernel words land in the kernel.
    pub fn verify(&self, maxlen: usize) -> Result<()> {
        let tgt = self.target.ext();
        for (i, w) in self.l.fp.reduced_words(maxlen, DEFAULT_WORD_BUDGET)?.iter().enumerate() {
            if tgt.f().apply(self.middle(w)) != self.l.fold(w) {
                return Err(Error::DiagramFailure {
                    square: Square::Right,
                    witness: i,
                });
            }
        }
        for b in tgt.b().elements() {
            if self.middle(&self.l.iota2(b)) != self.target.s().apply(b) {
                return Err(Error::DiagramFailure {
                    square: Square::Section,
                    witness: b,
                });
            }
        }
        for w in self.l.kernel_words(maxlen)? {
            self.kernel(&self.l.word_to_pres(&w)?)?;
        }
        Ok(())
    }
}

/// Sends `phi: E -> P(S)` to `L(E) -> S` with middle map `<phi_G, t>`.
pub fn adjunction_transpose(e: &Extension, s: &SplitExtension, phi: &ExtMorphism) -> Result<LTranspose> {
    if !phi.source().g().same_table(e.g()) || !phi.target().g().same_table(s.ext().g()) {
        return Err(Error::BadShape("morphism does not go from E to P(S)".into()));
    }
    if !e.same_base(s.ext()) {
        return Err(Error::MismatchedBase);
    }
    Ok(LTranspose {
        l: l_of_extension(e),
        target: s.clone(),
        phi_g: phi.phi_g().clone(),
    })
}

/// Precomposes with `lambda_E`: `phi_G = middle . iota_1`,
/// `phi_A = kernel . lambda_A`.
pub fn adjunction_untranspose(tr: &LTranspose) -> Result<ExtMorphism> {
    let e = &tr.l.e;
    let phi_g = e.g().elements().map(|g| tr.middle(&tr.l.iota1(g))).collect();
    let phi_a = e
        .a()
        .elements()
        .map(|a| tr.kernel(&tr.l.lambda_a(a)))
        .collect::<Result<Vec<_>>>()?;
    check_morphism(e, tr.target.ext(), phi_a, phi_g)
}

/// The counit `epsilon_S: LP(S) -> S`, middle map `<1_G, s>`.
pub fn counit(s: &SplitExtension) -> LTranspose {
    LTranspose {
        l: l_of_extension(s.ext()),
        target: s.clone(),
        phi_g: GroupHom::identity(s.ext().g()),
    }
}

/// `P(epsilon_S) . lambda_{P(S)} = 1`.
pub fn triangle_check(s: &SplitExtension) -> Result<bool> {
    let back = adjunction_untranspose(&counit(s))?;
    Ok(back.same_maps(&ExtMorphism::identity(s.ext())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extensions::{make_extension, semidirect_from_action};
    use std::collections::BTreeSet;
    use std::sync::Arc;

    fn z(n: usize) -> GroupRef {
        Arc::new(FiniteGroup::cyclic(n))
    }

    fn z4_over_z2() -> Extension {
        make_extension(&z(2), &z(4), &z(2), vec![0, 2], vec![0, 1, 0, 1]).unwrap()
    }

    fn z2_identity() -> Extension {
        Extension::trivial_over(&z(2))
    }

    fn w(s: &str) -> FpWord {
        s.parse().unwrap()
    }

    fn p(s: &str) -> PresWord {
        s.parse().unwrap()
    }

    #[test]
    fn reduction_examples() {
        let fp = FreeProduct::new(&z(2), &z(2));
        assert!(fp.reduce(&w("g:1 g:1")).is_empty());
        let fp = FreeProduct::new(&z(4), &z(2));
        assert_eq!(fp.reduce(&w("b:1 g:0")), w("b:1"));
        assert!(fp.reduce(&w("g:1 b:1 b:1 g:3")).is_empty());
    }

    #[test]
    fn literal_round_trip() {
        let x = w("b:1 g:3 b:0");
        assert_eq!(x.to_string(), "b:1 g:3 b:0");
        assert_eq!(p("(1,0) (2,1)").to_string(), "(1,0) (2,1)");
        assert!("q:1".parse::<FpWord>().is_err());
        assert!("(1;0)".parse::<PresWord>().is_err());
    }

    #[test]
    fn copair_examples() {
        let e = z4_over_z2();
        let l = l_of_extension(&e);
        assert_eq!(l.fold(&w("b:1 g:1")), 0);
        assert_eq!(l.fold(&w("g:2")), 0);
        assert!(!l.in_kernel(&w("g:1")));
        let fp = FreeProduct::new(&z(3), &z(3));
        let id = GroupHom::identity(&z(3));
        let word = w("g:1 b:2 g:2");
        assert_eq!(copair_eval(&id, &id, &word), 2);
        assert_eq!(copair_eval(&id, &id, &fp.reduce(&word)), 2);
    }

    #[test]
    fn kernel_enumeration_matches_brute_force() {
        let e = z2_identity();
        let l = l_of_extension(&e);
        let fast: BTreeSet<FpWord> = l.kernel_words(2).unwrap().into_iter().collect();
        // all words of length <= 2 over every letter, identities included
        let letters: Vec<Letter> = (0..2).flat_map(|i| [Letter::g(i), Letter::b(i)]).collect();
        let mut brute = BTreeSet::new();
        brute.insert(FpWord::empty());
        for &x in &letters {
            brute.insert(l.fp.reduce(&FpWord::new(vec![x])));
            for &y in &letters {
                brute.insert(l.fp.reduce(&FpWord::new(vec![x, y])));
            }
        }
        let brute: BTreeSet<FpWord> = brute.into_iter().filter(|w| l.in_kernel(w)).collect();
        assert_eq!(fast, brute);
        assert_eq!(fast.len(), 3);
    }

    #[test]
    fn normal_form_examples() {
        let e = z2_identity();
        for b in 0..2 {
            assert!(pres_normal_form(&e, &PresWord::new(vec![(0, b)])).is_empty());
        }
        assert!(pres_normal_form(&e, &p("(1,0) (1,1)")).is_empty());
        assert_eq!(pres_normal_form(&e, &p("(1,0)")), p("(1,0)"));
    }

    #[test]
    fn phi_examples() {
        let e = z4_over_z2();
        assert_eq!(pres_to_word(&e, &p("(1,0)")), w("g:1 b:1"));
        assert_eq!(pres_to_word(&e, &p("(2,0)")), w("g:2"));
        assert!(pres_to_word(&e, &PresWord::empty()).is_empty());
    }

    #[test]
    fn psi_examples() {
        let e = z4_over_z2();
        assert_eq!(word_to_pres(&e, &w("g:1 b:1")).unwrap(), p("(1,0)"));
        assert!(word_to_pres(&e, &FpWord::empty()).unwrap().is_empty());
        assert_eq!(word_to_pres(&e, &w("g:1")).unwrap_err(), Error::NotInKernel);
    }

    #[test]
    fn canonical_shape() {
        let fp = FreeProduct::new(&z(4), &z(2));
        assert_eq!(fp.canonical_pairs(&w("g:1 b:1")), vec![(0, 1), (1, 0)]);
        assert_eq!(fp.canonical_pairs(&w("b:1 g:3")), vec![(1, 3)]);
        assert!(fp.canonical_pairs(&FpWord::empty()).is_empty());
    }

    #[test]
    fn lambda_components() {
        let e = z4_over_z2();
        let l = l_of_extension(&e);
        assert_eq!(l.iota1(1), w("g:1"));
        for b in 0..2 {
            assert_eq!(l.fold(&l.iota2(b)), b);
        }
        assert_eq!(l.lambda_a(1), p("(2,0)"));
    }

    #[test]
    fn transpose_round_trip_on_klein_morphisms() {
        let klein = Arc::new(FiniteGroup::direct_product(
            &FiniteGroup::cyclic(2),
            &FiniteGroup::cyclic(2),
        ));
        let e = make_extension(&z(2), &klein, &z(2), vec![0, 2], vec![0, 1, 0, 1]).unwrap();
        let s = SplitExtension::new(e.clone(), GroupHom::new_unchecked(z(2), klein.clone(), vec![0, 1])).unwrap();
        let beta = vec![0, 3, 2, 1];
        for phi_g in [vec![0, 1, 2, 3], beta] {
            let phi = check_morphism(&e, s.ext(), vec![0, 1], phi_g).unwrap();
            let tr = adjunction_transpose(&e, &s, &phi).unwrap();
            tr.verify(6).unwrap();
            let back = adjunction_untranspose(&tr).unwrap();
            assert!(back.same_maps(&phi));
        }
    }

    #[test]
    fn triangle_identity() {
        let s = semidirect_from_action(&z(2), &z(3), &[vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
        assert!(triangle_check(&s).unwrap());
        let eps = counit(&s);
        eps.verify(5).unwrap();
        let g = s.ext().g();
        for x in g.elements() {
            for b in 0..2 {
                let word = FpWord::new(vec![Letter::g(x), Letter::b(b)]);
                assert_eq!(eps.middle(&word), g.mul(x, s.s().apply(b)));
            }
        }
    }

    #[test]
    fn transpose_rejects_mismatched_base() {
        let e = z4_over_z2();
        let s = semidirect_from_action(&z(3), &z(2), &vec![vec![0, 1]; 3]).unwrap();
        let phi = ExtMorphism::identity(&e);
        assert!(adjunction_transpose(&e, &s, &phi).is_err());
    }

    #[test]
    fn phi_psi_bijection() {
        for (e, maxlen, max_gens) in [(z2_identity(), 8, 4), (z4_over_z2(), 6, 3)] {
            let l = l_of_extension(&e);
            for w in l.kernel_words(maxlen).unwrap() {
                assert_eq!(l.pres_to_word(&l.word_to_pres(&w).unwrap()), w);
            }
            for p in l.pres_words(max_gens, DEFAULT_WORD_BUDGET).unwrap() {
                assert_eq!(l.word_to_pres(&l.pres_to_word(&p)).unwrap(), l.normal_form(&p));
            }
        }
    }

    #[test]
    fn normal_forms_are_unique() {
        let l = l_of_extension(&z4_over_z2());
        let mut by_image = std::collections::HashMap::new();
        for p in l.pres_words(3, DEFAULT_WORD_BUDGET).unwrap() {
            let nf = l.normal_form(&p);
            assert_eq!(l.normal_form(&nf), nf);
            assert_eq!(l.pres_to_word(&nf), l.pres_to_word(&p));
            let prev = by_image.entry(l.pres_to_word(&p)).or_insert_with(|| nf.clone());
            assert_eq!(*prev, nf);
        }
    }

    #[test]
    fn psi_is_multiplicative() {
        let l = l_of_extension(&z4_over_z2());
        let words = l.kernel_words(4).unwrap();
        for x in &words {
            for y in &words {
                let xy = l.fp.mul(x, y);
                assert!(l.in_kernel(&xy));
                let lhs = l.word_to_pres(&xy).unwrap();
                let rhs = l.kernel_mul(&l.word_to_pres(x).unwrap(), &l.word_to_pres(y).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn reduction_is_idempotent(raw in proptest::collection::vec((proptest::bool::ANY, 0usize..4), 0..12)) {
            let fp = FreeProduct::new(&z(4), &z(2));
            let word = FpWord::new(raw.iter().map(|&(is_g, i)| if is_g { Letter::g(i) } else { Letter::b(i % 2) }).collect());
            let r = fp.reduce(&word);
            proptest::prop_assert_eq!(fp.reduce(&r), r.clone());
            proptest::prop_assert!(r.len() <= word.len());
            let (u, v) = (GroupHom::identity(&z(4)), GroupHom::new_unchecked(z(2), z(4), vec![0, 2]));
            proptest::prop_assert_eq!(copair_eval(&u, &v, &word), copair_eval(&u, &v, &r));
        }

        #[test]
        fn inverse_cancels(raw in proptest::collection::vec((proptest::bool::ANY, 0usize..4), 0..10)) {
            let fp = FreeProduct::new(&z(4), &z(2));
            let word = FpWord::new(raw.iter().map(|&(is_g, i)| if is_g { Letter::g(i) } else { Letter::b(i % 2) }).collect());
            proptest::prop_assert!(fp.mul(&word, &fp.inv(&word)).is_empty());
        }
    }
}
