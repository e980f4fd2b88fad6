//! Polynomials over a small prime field, and Berlekamp factorization.

/// Coefficients ascending in `[0, p)`, no trailing zeros.
pub type FpPoly = Vec<u64>;

#[derive(Debug, Clone, Copy)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        assert!(p >= 2 && p < (1 << 31));
        Fp { p }
    }

    #[inline]
    fn mul_mod(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn inv(&self, a: u64) -> u64 {
        self.pow(a, self.p - 2)
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul_mod(r, a);
            }
            a = self.mul_mod(a, a);
            e >>= 1;
        }
        r
    }

    fn trim(mut v: FpPoly) -> FpPoly {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> FpPoly {
        let n = a.len().max(b.len());
        let mut v = vec![0; n];
        for i in 0..n {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            v[i] = (x + self.p - y) % self.p;
        }
        Self::trim(v)
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> FpPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut v = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                v[i + j] = (v[i + j] + x * y) % self.p;
            }
        }
        Self::trim(v)
    }

    /// `(q, r)` with `a = q b + r`.
    pub fn divrem(&self, a: &[u64], b: &[u64]) -> (FpPoly, FpPoly) {
        assert!(!b.is_empty(), "division by zero polynomial");
        let mut r = a.to_vec();
        if r.len() < b.len() {
            return (Vec::new(), Self::trim(r));
        }
        let db = b.len() - 1;
        let inv = self.inv(b[db]);
        let mut q = vec![0u64; r.len() - db];
        for k in (0..q.len()).rev() {
            let top = r[k + db];
            if top == 0 {
                continue;
            }
            let c = self.mul_mod(top, inv);
            q[k] = c;
            for (i, &y) in b.iter().enumerate() {
                r[k + i] = (r[k + i] + self.p - self.mul_mod(c, y)) % self.p;
            }
        }
        r.truncate(db);
        (Self::trim(q), Self::trim(r))
    }

    pub fn rem(&self, a: &[u64], b: &[u64]) -> FpPoly {
        self.divrem(a, b).1
    }

    pub fn monic(&self, a: &[u64]) -> FpPoly {
        match a.last() {
            None => Vec::new(),
            Some(&lc) => {
                let inv = self.inv(lc);
                a.iter().map(|&c| self.mul_mod(c, inv)).collect()
            }
        }
    }

    pub fn gcd(&self, a: &[u64], b: &[u64]) -> FpPoly {
        let (mut a, mut b) = (Self::trim(a.to_vec()), Self::trim(b.to_vec()));
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    pub fn derivative(&self, a: &[u64]) -> FpPoly {
        Self::trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| self.mul_mod(c, i as u64 % self.p))
                .collect(),
        )
    }

    /// `true` if `f` (with `p ∤ lc`) is square-free modulo `p`.
    pub fn is_square_free(&self, f: &[u64]) -> bool {
        let g = self.gcd(f, &self.derivative(f));
        g.len() == 1
    }

    /// Extended Euclid: `(g, s, t)` with `s a + t b = g`, `g` monic.
    pub fn ext_gcd(&self, a: &[u64], b: &[u64]) -> (FpPoly, FpPoly, FpPoly) {
        let (mut r0, mut r1) = (Self::trim(a.to_vec()), Self::trim(b.to_vec()));
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = self.inv(*r0.last().expect("nonzero gcd"));
        let sc = |v: &[u64]| -> FpPoly { Self::trim(v.iter().map(|&c| self.mul_mod(c, inv)).collect()) };
        (sc(&r0), sc(&s0), sc(&t0))
    }

    /// Irreducible monic factors of a monic square-free `f`.
    pub fn berlekamp(&self, f: &[u64]) -> Vec<FpPoly> {
        let n = f.len() - 1;
        if n <= 1 {
            return vec![f.to_vec()];
        }
        // Q[i] = x^(i p) mod f, rows of the Berlekamp matrix
        let xp = self.pow_x(self.p, f);
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(n);
        let mut cur: FpPoly = vec![1];
        for _ in 0..n {
            let mut row = cur.clone();
            row.resize(n, 0);
            rows.push(row);
            cur = self.rem(&self.mul(&cur, &xp), f);
        }
        // (Q - I)^T kernel
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = (row[i] + self.p - 1) % self.p;
        }
        let basis = self.left_kernel(&rows, n);
        let r = basis.len();
        let mut factors = vec![f.to_vec()];
        if r == 1 {
            return factors;
        }
        'outer: for v in basis.iter().skip(1) {
            let v = Self::trim(v.clone());
            let mut next = Vec::new();
            for u in factors.drain(..) {
                if u.len() <= 2 {
                    next.push(u);
                    continue;
                }
                let mut rest = u;
                for s in 0..self.p {
                    if rest.len() <= 2 {
                        break;
                    }
                    let mut vs = v.clone();
                    if vs.is_empty() {
                        vs.push(0);
                    }
                    vs[0] = (vs[0] + self.p - s) % self.p;
                    let vs = Self::trim(vs);
                    let g = self.gcd(&rest, &vs);
                    if g.len() > 1 && g.len() < rest.len() {
                        rest = self.divrem(&rest, &g).0;
                        next.push(g);
                    }
                }
                next.push(self.monic(&rest));
            }
            factors = next;
            if factors.len() == r {
                break 'outer;
            }
        }
        factors
    }

    /// `x^e mod f`.
    fn pow_x(&self, mut e: u64, f: &[u64]) -> FpPoly {
        let mut result: FpPoly = vec![1];
        let mut base = self.rem(&[0, 1], f);
        while e > 0 {
            if e & 1 == 1 {
                result = self.rem(&self.mul(&result, &base), f);
            }
            base = self.rem(&self.mul(&base, &base), f);
            e >>= 1;
        }
        result
    }

    /// Basis of `{v : v M = 0}` for the `n x n` matrix given by rows.
    fn left_kernel(&self, rows: &[Vec<u64>], n: usize) -> Vec<Vec<u64>> {
        // transpose so we solve M^T v = 0 by column reduction
        let mut a: Vec<Vec<u64>> = (0..n).map(|j| (0..n).map(|i| rows[i][j]).collect()).collect();
        let mut pivot_col_of_row = Vec::new();
        let mut row = 0;
        let mut is_pivot = vec![false; n];
        for col in 0..n {
            let Some(pr) = (row..n).find(|&r| a[r][col] != 0) else { continue };
            a.swap(row, pr);
            let inv = self.inv(a[row][col]);
            for x in a[row].iter_mut() {
                *x = self.mul_mod(*x, inv);
            }
            for r in 0..n {
                if r != row && a[r][col] != 0 {
                    let c = a[r][col];
                    for k in 0..n {
                        let sub = self.mul_mod(c, a[row][k]);
                        a[r][k] = (a[r][k] + self.p - sub) % self.p;
                    }
                }
            }
            pivot_col_of_row.push(col);
            is_pivot[col] = true;
            row += 1;
        }
        let mut basis = Vec::new();
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u64; n];
            v[free] = 1;
            for (r, &pc) in pivot_col_of_row.iter().enumerate() {
                v[pc] = (self.p - a[r][free]) % self.p;
            }
            basis.push(v);
        }
        // make sure the constant vector comes first
        basis.sort_by_key(|v| v.iter().rposition(|&x| x != 0).unwrap_or(0));
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn berlekamp_splits_product() {
        let fp = Fp::new(7);
        // (x+1)(x+2)(x^2+1) mod 7; x^2+1 irreducible mod 7
        let f = fp.mul(&fp.mul(&[1, 1], &[2, 1]), &[1, 0, 1]);
        let mut fs = fp.berlekamp(&f);
        fs.sort();
        assert_eq!(fs.len(), 3);
        let prod = fs.iter().fold(vec![1u64], |acc, g| fp.mul(&acc, g));
        assert_eq!(prod, f);
    }

    #[test]
    fn ext_gcd_bezout() {
        let fp = Fp::new(11);
        let a = vec![3, 0, 1];
        let b = vec![1, 1];
        let (g, s, t) = fp.ext_gcd(&a, &b);
        assert_eq!(g, vec![1]);
        let lhs = {
            let x = fp.mul(&s, &a);
            let y = fp.mul(&t, &b);
            let n = x.len().max(y.len());
            Fp::trim((0..n).map(|i| (x.get(i).unwrap_or(&0) + y.get(i).unwrap_or(&0)) % 11).collect())
        };
        assert_eq!(lhs, vec![1]);
    }
}
