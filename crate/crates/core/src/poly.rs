//! Sparse multivariate polynomials with integer coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::util::{bit_size, log_abs};

/// Exponent vector of a monomial. Ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn to_i64(&self) -> Vec<i64> {
        self.0.iter().map(|&e| e as i64).collect()
    }

    pub fn from_i64(v: &[i64]) -> Self {
        assert!(v.iter().all(|&e| e >= 0), "negative exponent");
        ExponentVector(v.iter().map(|&e| e as u32).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `nvars` variables stored as a map from exponents to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(nvars, ExponentVector::zero(nvars), c)
    }

    pub fn monomial(nvars: usize, e: ExponentVector, c: impl Into<BigInt>) -> Self {
        assert_eq!(e.len(), nvars);
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        SparsePoly { nvars, terms }
    }

    /// The variable x_{i+1} (zero-based index `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(nvars, ExponentVector::unit(nvars, i), 1)
    }

    /// Builds a polynomial from (exponent, coefficient) pairs, merging repeats.
    pub fn from_terms<I>(nvars: usize, it: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, BigInt)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: ExponentVector, c: BigInt) {
        assert_eq!(e.len(), self.nvars, "exponent length mismatch");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &ExponentVector) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn support(&self) -> Vec<ExponentVector> {
        self.terms.keys().cloned().collect()
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(|e| e.degree()).max().unwrap_or(0)
    }

    /// The constant polynomial's value if this polynomial has no nonconstant term.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                (e.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigInt::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.add(e2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.nvars, 1);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact value at a rational point.
    pub fn evaluate(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.nvars, "point length must equal nvars");
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (x, &k) in point.iter().zip(&e.0) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Value at an integer point modulo `p`.
    pub fn eval_mod(&self, point: &[u64], p: u64) -> u64 {
        assert_eq!(point.len(), self.nvars);
        let pb = BigInt::from(p);
        let mut acc: u128 = 0;
        for (e, c) in &self.terms {
            let cm = c.mod_floor_u64(&pb);
            let mut t = cm as u128;
            for (&x, &k) in point.iter().zip(&e.0) {
                t = t * pow_mod(x % p, k as u64, p) as u128 % p as u128;
            }
            acc = (acc + t) % p as u128;
        }
        acc as u64
    }

    /// Substitutes x_{var} := value, keeping the variable count (the variable becomes absent).
    pub fn substitute_value(&self, var: usize, value: &BigInt) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = e2.0[var];
            e2.0[var] = 0;
            out.add_term(e2, c * num_traits::pow(value.clone(), k as usize));
        }
        out
    }

    /// Drops variable `var`, which must not occur.
    pub fn remove_variable(&self, var: usize) -> Self {
        let mut out = Self::zero(self.nvars - 1);
        for (e, c) in &self.terms {
            assert_eq!(e.0[var], 0, "variable still present");
            let mut v = e.0.clone();
            v.remove(var);
            out.add_term(ExponentVector(v), c.clone());
        }
        out
    }

    /// Gcd of all coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        use num_integer::Integer;
        self.terms
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }
}

trait ModFloorU64 {
    fn mod_floor_u64(&self, p: &BigInt) -> u64;
}

impl ModFloorU64 for BigInt {
    fn mod_floor_u64(&self, p: &BigInt) -> u64 {
        use num_integer::Integer;
        use num_traits::ToPrimitive;
        self.mod_floor(p).to_u64().unwrap()
    }
}

pub(crate) fn pow_mod(b: u64, mut e: u64, p: u64) -> u64 {
    let m = p as u128;
    let mut r: u128 = 1 % m;
    let mut bb = b as u128 % m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * bb % m;
        }
        bb = bb * bb % m;
        e >>= 1;
    }
    r as u64
}

fn fmt_monomial(e: &ExponentVector) -> String {
    let mut parts = Vec::new();
    for (i, &k) in e.0.iter().enumerate() {
        match k {
            0 => {}
            1 => parts.push(format!("x{}", i + 1)),
            _ => parts.push(format!("x{}^{}", i + 1, k)),
        }
    }
    parts.join("*")
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mono = fmt_monomial(e);
            if mono.is_empty() {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "{}", mono)?;
            } else {
                write!(f, "{}*{}", a, mono)?;
            }
        }
        Ok(())
    }
}

/// An ordered list of polynomials over a common set of variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolySystem {
    nvars: usize,
    polys: Vec<SparsePoly>,
}

impl PolySystem {
    pub fn new(nvars: usize, polys: Vec<SparsePoly>) -> Result<Self> {
        if polys.is_empty() {
            return Err(Error::Invalid("a system needs at least one polynomial".into()));
        }
        if nvars == 0 {
            return Err(Error::Invalid("a system needs at least one variable".into()));
        }
        if let Some(p) = polys.iter().find(|p| p.nvars != nvars) {
            return Err(Error::Dimension(format!(
                "polynomial in {} variables inside a system of {}",
                p.nvars, nvars
            )));
        }
        Ok(PolySystem { nvars, polys })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn polys(&self) -> &[SparsePoly] {
        &self.polys
    }

    pub fn poly(&self, i: usize) -> &SparsePoly {
        &self.polys[i]
    }

    pub fn is_square(&self) -> bool {
        self.polys.len() == self.nvars
    }

    pub fn all_zero(&self) -> bool {
        self.polys.iter().all(|p| p.is_zero())
    }

    /// Union of all supports.
    pub fn exponent_set(&self) -> Vec<ExponentVector> {
        let mut v: Vec<ExponentVector> = self.polys.iter().flat_map(|p| p.support()).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn evaluate(&self, point: &[BigRational]) -> Vec<BigRational> {
        self.polys.iter().map(|p| p.evaluate(point)).collect()
    }

    pub fn with_poly(&self, f: SparsePoly) -> Self {
        let mut polys = self.polys.clone();
        polys.push(f);
        PolySystem::new(self.nvars, polys).expect("same variable count")
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.polys
            .iter()
            .map(|p| p.max_abs_coeff())
            .max()
            .unwrap_or_default()
    }
}

impl fmt::Display for PolySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.polys {
            writeln!(f, "{}", p)?;
        }
        Ok(())
    }
}

/// Size statistics used by the bound formulas.
#[derive(Clone, Debug, PartialEq)]
pub struct HeightStats {
    /// max log|c| over all coefficients (natural log).
    pub sigma: f64,
    /// Maximum total degree.
    pub degree: u64,
    /// Total number of terms, counted per polynomial.
    pub terms: usize,
    /// Bits in all coefficients (with sign bit) and exponents.
    pub sparse_size: u64,
}

pub fn height_stats(f: &PolySystem) -> HeightStats {
    let mut sigma: f64 = 0.0;
    let mut degree = 0;
    let mut terms = 0;
    let mut size = 0u64;
    for p in f.polys() {
        degree = degree.max(p.total_degree());
        terms += p.num_terms();
        for (e, c) in p.terms() {
            sigma = sigma.max(log_abs(c));
            size += bit_size(c) + 1;
            size += e.0.iter().map(|&k| bit_size(&BigInt::from(k))).sum::<u64>();
        }
    }
    HeightStats {
        sigma,
        degree,
        terms,
        sparse_size: size,
    }
}

// ---------------------------------------------------------------------------
// Parsing

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(usize),
    Caret,
    Star,
    Plus,
    Minus,
}

fn perr(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn tokenize(src: &str, line: usize) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            ' ' | '\t' | '\r' => i += 1,
            '+' => {
                out.push((Tok::Plus, col));
                i += 1;
            }
            '-' => {
                out.push((Tok::Minus, col));
                i += 1;
            }
            '*' => {
                out.push((Tok::Star, col));
                i += 1;
            }
            '^' => {
                out.push((Tok::Caret, col));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if i < chars.len() && (chars[i] == '.' || chars[i] == '/' || chars[i] == 'e' || chars[i] == 'E') {
                    return Err(perr(line, i + 1, "non-integer coefficient"));
                }
                let s: String = chars[start..i].iter().collect();
                out.push((Tok::Int(s.parse().unwrap()), start + 1));
            }
            'x' => {
                i += 1;
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    return Err(perr(line, col, "expected variable index after 'x'"));
                }
                let s: String = chars[start..i].iter().collect();
                let idx: usize = s
                    .parse()
                    .map_err(|_| perr(line, col, "variable index out of range"))?;
                out.push((Tok::Var(idx), col));
            }
            '.' | '/' => return Err(perr(line, col, "non-integer coefficient")),
            _ => return Err(perr(line, col, format!("unexpected character '{}'", c))),
        }
    }
    Ok(out)
}

fn parse_line(src: &str, line: usize, nvars: usize) -> Result<SparsePoly> {
    let toks = tokenize(src, line)?;
    let end_col = src.chars().count() + 1;
    let mut pos = 0;
    let mut poly = SparsePoly::zero(nvars);
    let mut first = true;
    while pos < toks.len() || first {
        let mut sign = BigInt::one();
        if first {
            if let Some((Tok::Minus, _)) = toks.get(pos) {
                sign = -sign;
                pos += 1;
            } else if let Some((Tok::Plus, _)) = toks.get(pos) {
                pos += 1;
            }
        } else {
            match toks.get(pos) {
                Some((Tok::Plus, _)) => pos += 1,
                Some((Tok::Minus, _)) => {
                    sign = -sign;
                    pos += 1;
                }
                Some((_, col)) => return Err(perr(line, *col, "expected '+' or '-' between terms")),
                None => break,
            }
        }
        first = false;
        // term := factor ('*' factor)*
        let mut coeff = sign;
        let mut exps = vec![0u32; nvars];
        let mut expect_factor = true;
        loop {
            if expect_factor {
                match toks.get(pos) {
                    Some((Tok::Int(v), _)) => {
                        coeff *= v;
                        pos += 1;
                    }
                    Some((Tok::Var(idx), col)) => {
                        let idx = *idx;
                        if idx == 0 || idx > nvars {
                            return Err(perr(
                                line,
                                *col,
                                format!("variable x{} outside x1..x{}", idx, nvars),
                            ));
                        }
                        pos += 1;
                        let mut k: u32 = 1;
                        if let Some((Tok::Caret, ccol)) = toks.get(pos) {
                            pos += 1;
                            match toks.get(pos) {
                                Some((Tok::Int(v), vcol)) => {
                                    k = v.try_into().map_err(|_| perr(line, *vcol, "exponent too large"))?;
                                    pos += 1;
                                }
                                _ => return Err(perr(line, *ccol, "expected exponent after '^'")),
                            }
                        }
                        exps[idx - 1] = exps[idx - 1]
                            .checked_add(k)
                            .ok_or_else(|| perr(line, *col, "exponent too large"))?;
                    }
                    Some((_, col)) => return Err(perr(line, *col, "expected a number or variable")),
                    None => return Err(perr(line, end_col, "unexpected end of line")),
                }
                expect_factor = false;
            } else if let Some((Tok::Star, _)) = toks.get(pos) {
                pos += 1;
                expect_factor = true;
            } else {
                break;
            }
        }
        poly.add_term(ExponentVector(exps), coeff);
    }
    Ok(poly)
}

/// Largest variable index mentioned in the source, used when the caller does not fix `n`.
pub fn infer_nvars(text: &str) -> usize {
    let mut best = 0;
    for line in text.lines() {
        let body = line.split('#').next().unwrap_or("");
        let chars: Vec<char> = body.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            if chars[i] == 'x' {
                let start = i + 1;
                let mut j = start;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                if let Ok(v) = chars[start..j].iter().collect::<String>().parse::<usize>() {
                    best = best.max(v);
                }
                i = j;
            } else {
                i += 1;
            }
        }
    }
    best.max(1)
}

/// Parses one polynomial per nonblank line; `#` starts a comment.
pub fn parse_system(text: &str, nvars: usize) -> Result<PolySystem> {
    if nvars == 0 {
        return Err(Error::Invalid("nvars must be positive".into()));
    }
    let mut polys = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        polys.push(parse_line(body, lineno + 1, nvars)?);
    }
    if polys.is_empty() {
        return Err(perr(1, 1, "no polynomials found"));
    }
    PolySystem::new(nvars, polys)
}

pub fn parse_poly(text: &str, nvars: usize) -> Result<SparsePoly> {
    parse_line(text, 1, nvars)
}

#[cfg(test)]
mod tests {
    use super::*;

    use crate::examples::SYSTEM1;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn parse_linear() {
        let f = parse_poly("x1 - 2", 1).unwrap();
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.coeff(&ExponentVector(vec![1])), BigInt::from(1));
        assert_eq!(f.coeff(&ExponentVector(vec![0])), BigInt::from(-2));
    }

    #[test]
    fn parse_example_system() {
        let f = parse_system(SYSTEM1, 3).unwrap();
        assert_eq!(f.len(), 3);
        assert!(f.polys().iter().all(|p| p.total_degree() == 24));
        let s = height_stats(&f);
        assert_eq!(s.degree, 24);
        assert_eq!(s.terms, 12);
        assert!((s.sigma - 144f64.ln()).abs() < 1e-12);
        let supp = f.poly(0).support();
        let want: Vec<ExponentVector> = [[0, 0, 0], [1, 0, 0], [0, 2, 0], [7, 8, 9]]
            .iter()
            .map(|v| ExponentVector(v.to_vec()))
            .collect();
        let mut got = supp.clone();
        got.sort();
        let mut want_sorted = want;
        want_sorted.sort();
        assert_eq!(got, want_sorted);
    }

    #[test]
    fn zero_polynomial() {
        let f = parse_poly("0", 2).unwrap();
        assert!(f.is_zero());
        assert!(f.support().is_empty());
        let s = height_stats(&PolySystem::new(2, vec![f]).unwrap());
        assert_eq!(s.sigma, 0.0);
        assert_eq!(s.degree, 0);
    }

    #[test]
    fn small_height_stats() {
        let f = parse_system("x1 - 2\nx1 - 3", 1).unwrap();
        let s = height_stats(&f);
        assert!((s.sigma - 3f64.ln()).abs() < 1e-12);
        assert_eq!((s.degree, s.terms), (1, 4));
        let g = parse_system("x1^7", 1).unwrap();
        assert_eq!(height_stats(&g).sigma, 0.0);
    }

    #[test]
    fn evaluation() {
        let f = parse_poly("x1^2 - 3*x1 + 2", 1).unwrap();
        assert_eq!(f.evaluate(&[q(2)]), q(0));
        assert_eq!(f.evaluate(&[q(0)]), q(2));
        let sys = parse_system(SYSTEM1, 3).unwrap();
        assert_eq!(sys.poly(0).evaluate(&[q(1), q(1), q(1)]), q(144));
        assert_eq!(sys.poly(0).eval_mod(&[1, 1, 1], 7), 144 % 7);
    }

    #[test]
    fn display_round_trip() {
        let sys = parse_system(SYSTEM1, 3).unwrap();
        assert_eq!(
            sys.poly(0).to_string(),
            "144 + 2*x1 - 3*x2^2 + x1^7*x2^8*x3^9"
        );
        let printed = sys.to_string();
        assert_eq!(parse_system(&printed, 3).unwrap(), sys);
        assert_eq!(parse_poly("-x1 + x1", 1).unwrap().to_string(), "0");
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_system("x1 + 1\nx1 + 1.5", 1) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 7)),
            other => panic!("unexpected {:?}", other),
        }
        match parse_system("x1 + x3", 2) {
            Err(Error::Parse { line, column, message }) => {
                assert_eq!((line, column), (1, 6));
                assert!(message.contains("x3"));
            }
            other => panic!("unexpected {:?}", other),
        }
        assert!(matches!(parse_system("x1 +", 1), Err(Error::Parse { .. })));
        assert!(matches!(parse_system("x1 x2", 2), Err(Error::Parse { .. })));
        assert!(matches!(parse_system("2 ^ 3", 1), Err(Error::Parse { .. })));
    }

    #[test]
    fn comments_and_blank_lines() {
        let sys = parse_system("# header\n\nx1*x2 - 1  # hyperbola\n\n", 2).unwrap();
        assert_eq!(sys.len(), 1);
        assert_eq!(infer_nvars("x1 + x12^2 # x99"), 12);
    }
}
