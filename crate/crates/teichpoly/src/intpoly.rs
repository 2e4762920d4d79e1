//! Dense univariate integer polynomials: the exact backbone behind
//! eliminants and certificates. Everything here is integer or rational
//! arithmetic; no floating point enters any decision.

use crate::error::{Error, Result};
use rug::{Float, Integer, Rational};

/// Coefficients ascend by degree; the vector never keeps trailing zeros,
/// so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPoly {
    coeffs: Vec<Integer>,
}

fn int_pow(b: &Integer, e: usize) -> Integer {
    let mut r = Integer::from(1);
    for _ in 0..e {
        r *= b;
    }
    r
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<Integer>) -> Self {
        while coeffs.last().map_or(false, |c| *c == 0) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn from_ascending_i64(c: &[i64]) -> Self {
        IntPoly::new(c.iter().map(|x| Integer::from(*x)).collect())
    }

    /// Literal constructor reading coefficients from the leading term down,
    /// the way eliminants are usually written out.
    pub fn from_descending_i64(c: &[i64]) -> Self {
        IntPoly::new(c.iter().rev().map(|x| Integer::from(*x)).collect())
    }

    pub fn monomial(c: Integer, k: usize) -> Self {
        let mut v = vec![Integer::new(); k + 1];
        v[k] = c;
        IntPoly::new(v)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Integer {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn lead(&self) -> Integer {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn constant(&self) -> Integer {
        self.coeff(0)
    }

    pub fn neg(&self) -> Self {
        IntPoly::new(self.coeffs.iter().map(|c| Integer::from(-c)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = vec![Integer::new(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            v[i] += c;
        }
        IntPoly::new(v)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![Integer::new(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] += Integer::from(a * b);
            }
        }
        IntPoly::new(v)
    }

    pub fn scale(&self, k: &Integer) -> Self {
        IntPoly::new(self.coeffs.iter().map(|c| Integer::from(c * k)).collect())
    }

    pub fn mul_pow_x(&self, k: usize) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![Integer::new(); k];
        v.extend(self.coeffs.iter().cloned());
        IntPoly::new(v)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| Integer::from(c * Integer::from(i as u64 + 1)))
                .collect(),
        )
    }

    pub fn eval_integer(&self, x: &Integer) -> Integer {
        let mut acc = Integer::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    pub fn eval_float(&self, x: &Float) -> Float {
        let prec = x.prec();
        let mut acc = Float::with_val(prec, 0);
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    /// Exact sign of the value at a rational point, computed without
    /// building the quotient: sign of sum a_i p^i q^(n-i).
    pub fn sign_at(&self, x: &Rational) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let n = self.coeffs.len() - 1;
        let p = x.numer();
        let q = x.denom();
        // Horner in p, multiplying one q back in per level: the result is
        // the integer f(p/q) q^n, whose sign equals the sign of f(p/q)
        let mut acc = Integer::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            acc *= p;
            acc += Integer::from(c * int_pow(q, n - i));
        }
        match acc.cmp0() {
            std::cmp::Ordering::Less => -1,
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Greater => 1,
        }
    }

    /// gcd of all coefficients, nonnegative; zero only for the zero
    /// polynomial.
    pub fn content(&self) -> Integer {
        let mut g = Integer::new();
        for c in &self.coeffs {
            g = Integer::from(g.gcd_ref(c));
        }
        g
    }

    /// Content removed, sign of the leading coefficient kept.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let g = self.content();
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| Integer::from(c / &g))
                .collect(),
        )
    }

    /// Exact quotient in integer polynomials; fails when any division step
    /// leaves a remainder.
    pub fn divexact(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::NotDivisible);
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let (n, m) = (self.coeffs.len() - 1, d.coeffs.len() - 1);
        if n < m {
            return Err(Error::NotDivisible);
        }
        let mut rem = self.coeffs.clone();
        let mut quo = vec![Integer::new(); n - m + 1];
        let dl = d.lead();
        for k in (0..=n - m).rev() {
            let top = rem[m + k].clone();
            if top == 0 {
                continue;
            }
            if !top.is_divisible(&dl) {
                return Err(Error::NotDivisible);
            }
            let q = Integer::from(&top / &dl);
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[j + k] -= Integer::from(dc * &q);
            }
            quo[k] = q;
        }
        if rem.iter().any(|c| *c != 0) {
            return Err(Error::NotDivisible);
        }
        Ok(IntPoly::new(quo))
    }

    /// Pseudo-remainder: the residue of lc(d)^(deg self - deg d + 1) * self
    /// under division by d. Requires deg self >= deg d, d nonzero.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let m = d.coeffs.len() - 1;
        let n = self.coeffs.len() - 1;
        let dl = d.lead();
        let mut rem = self.scale(&int_pow(&dl, n - m + 1)).coeffs;
        for k in (0..=n - m).rev() {
            if rem.len() <= m + k {
                continue;
            }
            let top = rem[m + k].clone();
            if top == 0 {
                continue;
            }
            let q = Integer::from(&top / &dl);
            debug_assert!(top.is_divisible(&dl));
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[j + k] -= Integer::from(dc * &q);
            }
        }
        rem.truncate(m.max(1));
        IntPoly::new(rem)
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.is_zero() {
            return b.positive_lead();
        }
        if b.is_zero() {
            return a.positive_lead();
        }
        if a.coeffs.len() < b.coeffs.len() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            if b.is_zero() {
                return a.positive_lead();
            }
            if b.coeffs.len() == 1 {
                return IntPoly::from_ascending_i64(&[1]);
            }
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
    }

    fn positive_lead(&self) -> Self {
        if self.lead() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Product of the distinct irreducible factors, primitive with positive
    /// leading coefficient.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInput("zero polynomial has no squarefree part"));
        }
        let p = self.primitive_part();
        if p.coeffs.len() == 1 {
            return Ok(IntPoly::from_ascending_i64(&[1]));
        }
        let g = p.gcd(&p.derivative());
        Ok(p.divexact(&g)?.primitive_part().positive_lead())
    }

    /// Coefficient list reversed: x^deg * self(1/x).
    pub fn reverse(&self) -> Self {
        let mut v = self.coeffs.clone();
        v.reverse();
        IntPoly::new(v)
    }

    /// +1 when the coefficients read the same from both ends, -1 when they
    /// negate, None otherwise (zero polynomial included).
    pub fn palindrome_sign(&self) -> Option<i8> {
        if self.is_zero() {
            return None;
        }
        let n = self.coeffs.len();
        if (0..n).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i]) {
            return Some(1);
        }
        if (0..n).all(|i| self.coeffs[i] == Integer::from(-&self.coeffs[n - 1 - i])) {
            return Some(-1);
        }
        None
    }

    /// For an even-degree palindrome p(Y) of degree 2m, the unique f with
    /// p(Y) = Y^m f(Y + 1/Y), computed through the recursion C_0 = 2,
    /// C_1 = A, C_k = A C_(k-1) - C_(k-2) for Y^k + Y^(-k).
    pub fn palindromic_reduce(&self) -> Result<Self> {
        if self.palindrome_sign() != Some(1) || self.coeffs.len() % 2 == 0 {
            return Err(Error::NonPalindromic);
        }
        let m = (self.coeffs.len() - 1) / 2;
        let mut f = IntPoly::new(vec![self.coeffs[m].clone()]);
        let mut c_prev = IntPoly::from_ascending_i64(&[2]);
        let mut c_cur = IntPoly::from_ascending_i64(&[0, 1]);
        let a = IntPoly::from_ascending_i64(&[0, 1]);
        for k in 1..=m {
            f = f.add(&c_cur.scale(&self.coeffs[m + k]));
            let c_next = a.mul(&c_cur).sub(&c_prev);
            c_prev = c_cur;
            c_cur = c_next;
        }
        Ok(f)
    }

    /// Inverse of the reduction: Y^deg(self) * self(Y + 1/Y), a palindrome
    /// of twice the degree.
    pub fn palindromic_lift(&self) -> Result<Self> {
        let m = self
            .deg()
            .ok_or(Error::ZeroInput("zero polynomial has no palindromic lift"))?;
        // Y^m f(Y + 1/Y) = sum a_k Y^(m-k) (Y^2+1)^k
        let y2p1 = IntPoly::from_ascending_i64(&[1, 0, 1]);
        let mut pow = IntPoly::from_ascending_i64(&[1]);
        let mut acc = IntPoly::zero();
        for (k, a) in self.coeffs.iter().enumerate() {
            acc = acc.add(&pow.scale(a).mul_pow_x(m - k));
            pow = pow.mul(&y2p1);
        }
        Ok(acc)
    }

    /// Strict bound on the absolute value of every complex root.
    pub fn root_bound(&self) -> Result<Rational> {
        if self.deg().unwrap_or(0) == 0 {
            return Err(Error::ZeroInput("constant polynomial has no root bound"));
        }
        let lead = Integer::from(self.lead().abs_ref());
        let mut m = Integer::new();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let a = Integer::from(c.abs_ref());
            if a > m {
                m = a;
            }
        }
        Ok(Rational::from(1) + Rational::from((m, lead)))
    }

    /// Sturm chain of a squarefree polynomial; each member is primitive and
    /// the remainder signs are preserved so variation counts are valid.
    fn sturm_chain(&self) -> Vec<IntPoly> {
        let mut chain = vec![self.primitive_part(), self.derivative().primitive_part()];
        loop {
            let a = &chain[chain.len() - 2];
            let b = &chain[chain.len() - 1];
            if b.is_zero() || a.coeffs.len() < b.coeffs.len() {
                break;
            }
            let delta = a.coeffs.len() - b.coeffs.len() + 1;
            let t = a.pseudo_rem(b);
            if t.is_zero() {
                break;
            }
            // pseudo_rem scaled a by lc(b)^delta; undo the sign so the
            // chain member equals a positive multiple of -rem(a, b)
            let flip = b.lead() < 0 && delta % 2 == 1;
            let next = if flip { t } else { t.neg() }.primitive_part();
            chain.push(next);
        }
        chain
    }

    fn sign_variations_at(chain: &[IntPoly], x: &Rational) -> usize {
        let mut last = 0;
        let mut count = 0;
        for p in chain {
            let s = p.sign_at(x);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct real roots in the open interval (a, b); the
    /// polynomial must be squarefree and nonzero at both endpoints.
    pub fn count_real_roots_between(&self, a: &Rational, b: &Rational) -> Result<usize> {
        if self.sign_at(a) == 0 || self.sign_at(b) == 0 {
            return Err(Error::RootIsolation("interval endpoint is a root"));
        }
        let chain = self.sturm_chain();
        let va = Self::sign_variations_at(&chain, a);
        let vb = Self::sign_variations_at(&chain, b);
        Ok(va.saturating_sub(vb))
    }

    /// Disjoint open intervals with rational endpoints, one per distinct
    /// real root. The input need not be squarefree; isolation runs on the
    /// squarefree part.
    pub fn isolate_real_roots(&self) -> Result<Vec<(Rational, Rational)>> {
        let g = self.squarefree_part()?;
        if g.deg().unwrap_or(0) == 0 {
            return Ok(Vec::new());
        }
        let bound = g.root_bound()?;
        let chain = g.sturm_chain();
        let lo = -bound.clone();
        let hi = bound;
        let mut out = Vec::new();
        let mut stack = vec![(lo, hi)];
        while let Some((a, b)) = stack.pop() {
            let va = Self::sign_variations_at(&chain, &a);
            let vb = Self::sign_variations_at(&chain, &b);
            let count = va.saturating_sub(vb);
            if count == 0 {
                continue;
            }
            if count == 1 {
                out.push((a, b));
                continue;
            }
            let mid = g.split_point(&a, &b)?;
            stack.push((a, mid.clone()));
            stack.push((mid, b));
        }
        out.sort_by(|x, y| x.0.cmp(&y.0));
        Ok(out)
    }

    /// A point strictly inside (a, b) where self does not vanish. The
    /// midpoint works unless it happens to be a root; then nearby fractions
    /// are tried, and with deg(self) roots at most one of deg+2 candidates
    /// must succeed.
    fn split_point(&self, a: &Rational, b: &Rational) -> Result<Rational> {
        let width = Rational::from(b - a);
        let n = self.coeffs.len() + 2;
        for k in 1..n as u64 {
            let cand = a.clone() + Rational::from(width.clone() * Rational::from((k, 2 * k + 1)));
            if self.sign_at(&cand) != 0 {
                return Ok(cand);
            }
        }
        Err(Error::RootIsolation("no root-free split point found"))
    }

    /// Shrink a sign-change bracket below `width`. Returns a degenerate
    /// pair (r, r) when bisection lands exactly on the root.
    pub fn refine_sign_change(
        &self,
        mut lo: Rational,
        mut hi: Rational,
        width: &Rational,
    ) -> Result<(Rational, Rational)> {
        let slo = self.sign_at(&lo);
        let shi = self.sign_at(&hi);
        if slo == 0 {
            return Ok((lo.clone(), lo));
        }
        if shi == 0 {
            return Ok((hi.clone(), hi));
        }
        if slo == shi {
            return Err(Error::RootIsolation("no sign change over the bracket"));
        }
        while Rational::from(&hi - &lo) >= *width {
            let mid = Rational::from(&lo + &hi) / Rational::from(2);
            let sm = self.sign_at(&mid);
            if sm == 0 {
                return Ok((mid.clone(), mid));
            }
            if sm == slo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok((lo, hi))
    }

    /// All rational roots with multiplicities, plus the quotient left after
    /// dividing the corresponding linear factors out.
    pub fn strip_rational_roots(&self) -> Result<(IntPoly, Vec<(Rational, usize)>)> {
        if self.is_zero() {
            return Err(Error::ZeroInput("zero polynomial has every root"));
        }
        let mut found: Vec<(Rational, usize)> = Vec::new();
        let mut f = self.clone();
        let zeros = f.coeffs.iter().take_while(|c| **c == 0).count();
        if zeros > 0 {
            f = IntPoly::new(f.coeffs[zeros..].to_vec());
            found.push((Rational::new(), zeros));
        }
        if f.deg().unwrap_or(0) == 0 {
            return Ok((f, found));
        }
        let g = f.squarefree_part()?;
        let lead_bound = Integer::from(g.lead().abs_ref());
        // distinct rationals with denominator <= L sit at least 1/L^2 apart
        let width = Rational::from((
            Integer::from(1),
            Integer::from(2) * Integer::from(&lead_bound * &lead_bound),
        ));
        for (a, b) in g.isolate_real_roots()? {
            let (lo, hi) = g.refine_sign_change(a, b, &width)?;
            let cand = if lo == hi {
                lo
            } else {
                simplest_between(&lo, &hi)
            };
            if *cand.denom() <= lead_bound && f.sign_at(&cand) == 0 {
                // divide (q x - p) out as often as it goes
                let factor = IntPoly::new(vec![
                    Integer::from(-cand.numer()),
                    cand.denom().clone(),
                ]);
                let mut mult = 0;
                while let Ok(q) = f.divexact(&factor) {
                    f = q;
                    mult += 1;
                }
                found.push((cand, mult));
            }
        }
        found.sort_by(|x, y| x.0.cmp(&y.0));
        Ok((f, found))
    }

    /// Rabin's test over the prime field with p elements. Errors when p
    /// divides the leading coefficient, because the reduction then drops
    /// degree and certifies nothing.
    pub fn irreducible_mod_p(&self, p: u64) -> Result<bool> {
        let n = self
            .deg()
            .ok_or(Error::ZeroInput("zero polynomial is not irreducible"))?;
        use rug::ops::RemRounding;
        let pi = Integer::from(p);
        let lead_mod = Integer::from(self.lead().rem_euc(&pi)).to_u64().unwrap();
        if lead_mod == 0 {
            return Err(Error::LeadingDivisibleByP(p));
        }
        if n == 0 {
            return Ok(false);
        }
        if n == 1 {
            return Ok(true);
        }
        let mut f: Vec<u64> = self
            .coeffs
            .iter()
            .map(|c| Integer::from(c.rem_euc(&pi)).to_u64().unwrap())
            .collect();
        let inv = mod_inv(lead_mod, p);
        for c in f.iter_mut() {
            *c = mul_mod(*c, inv, p);
        }
        // x^(p^n) must reduce to x, and x^(p^(n/q)) - x must be coprime to
        // f for each prime q dividing n
        let x = vec![0, 1];
        let full = mp_pow_x(&Integer::from(Integer::u_pow_u(p as u32, n as u32)), &f, p);
        if mp_trimmed(mp_sub(&full, &x, p)) != Vec::<u64>::new() {
            return Ok(false);
        }
        for q in prime_divisors(n as u64) {
            let e = Integer::from(Integer::u_pow_u(p as u32, (n as u64 / q) as u32));
            let part = mp_pow_x(&e, &f, p);
            let diff = mp_trimmed(mp_sub(&part, &x, p));
            let g = mp_gcd(diff, f.clone(), p);
            if g.len() > 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl std::fmt::Display for IntPoly {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if *c == 0 {
                continue;
            }
            let mag = Integer::from(c.abs_ref());
            if first {
                if *c < 0 {
                    write!(out, "-")?;
                }
                first = false;
            } else if *c < 0 {
                write!(out, " - ")?;
            } else {
                write!(out, " + ")?;
            }
            match i {
                0 => write!(out, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(out, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(out, "x")?;
                    } else {
                        write!(out, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// The rational with the smallest denominator in the closed interval
/// [lo, hi], by descending the Stern-Brocot tree.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    assert!(lo <= hi);
    let (fl, _) = lo.numer().clone().div_rem_floor(lo.denom().clone());
    let floor_lo = Rational::from(fl.clone());
    if floor_lo == *lo {
        return floor_lo;
    }
    let next_int = Rational::from(&fl + Integer::from(1));
    if next_int <= *hi {
        return next_int;
    }
    // both endpoints share the integer part; recurse on the reciprocal gap
    let inner = simplest_between(
        &Rational::from(Rational::from(hi - &floor_lo).recip_ref()),
        &Rational::from(Rational::from(lo - &floor_lo).recip_ref()),
    );
    floor_lo + inner.recip()
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

fn mod_inv(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn mp_trimmed(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn mp_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut v = vec![0u64; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        v[i] = *x % p;
    }
    for (i, x) in b.iter().enumerate() {
        v[i] = (v[i] + p - (*x % p)) % p;
    }
    v
}

/// Remainder modulo a monic polynomial f over the field with p elements.
fn mp_rem(mut a: Vec<u64>, f: &[u64], p: u64) -> Vec<u64> {
    let m = f.len() - 1;
    while a.len() > m {
        let top = a.pop().unwrap();
        if top == 0 {
            continue;
        }
        let k = a.len() - m;
        for (j, fc) in f[..m].iter().enumerate() {
            a[j + k] = (a[j + k] + p - mul_mod(top, *fc, p)) % p;
        }
    }
    mp_trimmed(a)
}

fn mp_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            v[i + j] = (v[i + j] + mul_mod(*x, *y, p)) % p;
        }
    }
    mp_rem(v, f, p)
}

/// x^e modulo the monic polynomial f, with e given as a big integer.
fn mp_pow_x(e: &Integer, f: &[u64], p: u64) -> Vec<u64> {
    let x = mp_rem(vec![0, 1], f, p);
    let mut r = mp_rem(vec![1], f, p);
    let bits = e.significant_bits();
    for i in (0..bits).rev() {
        r = mp_mulmod(&r, &r, f, p);
        if e.get_bit(i) {
            r = mp_mulmod(&r, &x, f, p);
        }
    }
    r
}

fn mp_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    a = mp_trimmed(a);
    b = mp_trimmed(b);
    while !b.is_empty() {
        // make b monic so mp_rem applies
        let inv = mod_inv(*b.last().unwrap(), p);
        let monic: Vec<u64> = b.iter().map(|c| mul_mod(*c, inv, p)).collect();
        let r = mp_rem(a, &monic, p);
        a = b;
        b = r;
    }
    if let Some(last) = a.last().copied() {
        let inv = mod_inv(last, p);
        for c in a.iter_mut() {
            *c = mul_mod(*c, inv, p);
        }
    }
    a
}
