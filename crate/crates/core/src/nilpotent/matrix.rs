use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense arbitrary-precision integer matrix, row major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> IntMat {
        IntMat { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> IntMat {
        let mut m = IntMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> IntMat {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut m = IntMat::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m[(i, j)] = BigInt::from(*v);
            }
        }
        m
    }

    pub fn from_bigint_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> IntMat {
        let r = rows.len();
        let mut m = IntMat::zero(r, cols);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, v) in row.into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        (0..self.cols).map(|j| self[(i, j)].clone()).collect()
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += add;
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row a += q * row b
    fn add_row(&mut self, a: usize, b: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let add = q * &self[(b, j)];
            self[(a, j)] += add;
        }
    }

    fn add_col(&mut self, a: usize, b: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let add = q * &self[(i, b)];
            self[(i, a)] += add;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let v = -self[(a, j)].clone();
            self[(a, j)] = v;
        }
    }

    fn negate_col(&mut self, a: usize) {
        for i in 0..self.rows {
            let v = -self[(i, a)].clone();
            self[(i, a)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// Diagonalisation U * A * V = D with unimodular transforms and the
/// invariant factors on the diagonal in a divisibility chain.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub d: Vec<BigInt>,
    pub u: IntMat,
    pub v: IntMat,
    pub rank: usize,
}

impl SmithForm {
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.d[..self.rank]
    }
}

pub fn smith_normal_form(a: &IntMat) -> SmithForm {
    let mut b = a.clone();
    let mut u = IntMat::identity(a.rows);
    let mut v = IntMat::identity(a.cols);
    let t_max = a.rows.min(a.cols);

    for t in 0..t_max {
        'pivot: loop {
            // Smallest nonzero entry of the working submatrix.
            let mut best: Option<(usize, usize)> = None;
            for i in t..b.rows {
                for j in t..b.cols {
                    if b[(i, j)].is_zero() {
                        continue;
                    }
                    match &best {
                        Some(&(bi, bj)) if b[(bi, bj)].abs() <= b[(i, j)].abs() => {}
                        _ => best = Some((i, j)),
                    }
                }
            }
            let Some((pi, pj)) = best else { break 'pivot };
            b.swap_rows(t, pi);
            u.swap_rows(t, pi);
            b.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in (t + 1)..b.rows {
                if !b[(i, t)].is_zero() {
                    let q = -b[(i, t)].div_floor(&b[(t, t)]);
                    b.add_row(i, t, &q);
                    u.add_row(i, t, &q);
                    if !b[(i, t)].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in (t + 1)..b.cols {
                if !b[(t, j)].is_zero() {
                    let q = -b[(t, j)].div_floor(&b[(t, t)]);
                    b.add_col(j, t, &q);
                    v.add_col(j, t, &q);
                    if !b[(t, j)].is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue 'pivot;
            }
            // Pivot must divide the rest of the submatrix for the chain.
            for i in (t + 1)..b.rows {
                for j in (t + 1)..b.cols {
                    if !(&b[(i, j)] % &b[(t, t)]).is_zero() {
                        let one = BigInt::one();
                        b.add_row(t, i, &one);
                        u.add_row(t, i, &one);
                        continue 'pivot;
                    }
                }
            }
            break 'pivot;
        }
    }

    for t in 0..t_max {
        if b[(t, t)].is_negative() {
            b.negate_row(t);
            u.negate_row(t);
        }
    }

    let d: Vec<BigInt> = (0..t_max).map(|t| b[(t, t)].clone()).collect();
    let rank = d.iter().take_while(|x| !x.is_zero()).count();
    debug_assert!(d.iter().skip(rank).all(|x| x.is_zero()));
    SmithForm { d, u, v, rank }
}

/// Row-style Hermite form: T * A = H with T unimodular, pivots positive,
/// entries above each pivot reduced, pivot columns strictly increasing.
pub fn hermite_normal_form(a: &IntMat) -> (IntMat, IntMat) {
    let mut h = a.clone();
    let mut t = IntMat::identity(a.rows);
    let mut r = 0usize;
    for c in 0..a.cols {
        if r == h.rows {
            break;
        }
        // Clear the column below r by gcd steps.
        loop {
            let mut best: Option<usize> = None;
            for i in r..h.rows {
                if h[(i, c)].is_zero() {
                    continue;
                }
                match best {
                    Some(b) if h[(b, c)].abs() <= h[(i, c)].abs() => {}
                    _ => best = Some(i),
                }
            }
            let Some(p) = best else { break };
            h.swap_rows(r, p);
            t.swap_rows(r, p);
            let mut again = false;
            for i in (r + 1)..h.rows {
                if !h[(i, c)].is_zero() {
                    let q = -h[(i, c)].div_floor(&h[(r, c)]);
                    h.add_row(i, r, &q);
                    t.add_row(i, r, &q);
                    if !h[(i, c)].is_zero() {
                        again = true;
                    }
                }
            }
            if !again {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_row(r);
            t.negate_row(r);
        }
        // Reduce the rows above the pivot.
        for i in 0..r {
            if !h[(i, c)].is_zero() {
                let q = -h[(i, c)].div_floor(&h[(r, c)]);
                h.add_row(i, r, &q);
                t.add_row(i, r, &q);
            }
        }
        r += 1;
    }
    (h, t)
}

/// A sublattice of Z^ambient, stored as a Hermite-form basis without zero
/// rows. The canonical form makes lattice equality structural.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Lattice {
    pub ambient: usize,
    /// Hermite basis rows together with their pivot columns.
    basis: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl Lattice {
    pub fn empty(ambient: usize) -> Lattice {
        Lattice { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_rows(ambient: usize, rows: Vec<Vec<BigInt>>) -> Lattice {
        for r in &rows {
            assert_eq!(r.len(), ambient, "row length mismatch");
        }
        if rows.is_empty() {
            return Lattice::empty(ambient);
        }
        let m = IntMat::from_bigint_rows(rows, ambient);
        let (h, _) = hermite_normal_form(&m);
        let mut basis = Vec::new();
        let mut pivots = Vec::new();
        for i in 0..h.rows {
            let row = h.row(i);
            if let Some(p) = row.iter().position(|x| !x.is_zero()) {
                basis.push(row);
                pivots.push(p);
            }
        }
        Lattice { ambient, basis, pivots }
    }

    pub fn from_i64_rows(ambient: usize, rows: &[Vec<i64>]) -> Lattice {
        Lattice::from_rows(
            ambient,
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_rows(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> IntMat {
        IntMat::from_bigint_rows(self.basis.clone(), self.ambient)
    }

    /// Canonical coset representative of v modulo the lattice.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.reduce_with_coeffs(v).0
    }

    /// Reduction together with the basis coefficients subtracted:
    /// v = reduced + coeffs . basis.
    pub fn reduce_with_coeffs(&self, v: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
        assert_eq!(v.len(), self.ambient);
        let mut out = v.to_vec();
        let mut coeffs = vec![BigInt::zero(); self.basis.len()];
        for (i, row) in self.basis.iter().enumerate() {
            let p = self.pivots[i];
            if out[p].is_zero() {
                continue;
            }
            let q = out[p].div_floor(&row[p]);
            if q.is_zero() {
                continue;
            }
            for j in 0..self.ambient {
                let sub = &q * &row[j];
                out[j] -= sub;
            }
            coeffs[i] = q;
        }
        (out, coeffs)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Basis coefficients expressing v, when v lies in the lattice.
    pub fn solve(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let (red, coeffs) = self.reduce_with_coeffs(v);
        if red.iter().all(|x| x.is_zero()) {
            Some(coeffs)
        } else {
            None
        }
    }

    pub fn sum(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.ambient, other.ambient);
        let mut rows = self.basis.clone();
        rows.extend(other.basis.clone());
        Lattice::from_rows(self.ambient, rows)
    }

    pub fn intersect(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.ambient, other.ambient);
        if self.rank() == 0 || other.rank() == 0 {
            return Lattice::empty(self.ambient);
        }
        let mut stacked = self.basis.clone();
        stacked.extend(other.basis.clone());
        let m = IntMat::from_bigint_rows(stacked, self.ambient);
        let ker = left_kernel(&m);
        let mut rows = Vec::new();
        for k in ker {
            // v = (first block of coefficients) . basis(self)
            let mut v = vec![BigInt::zero(); self.ambient];
            for (i, row) in self.basis.iter().enumerate() {
                if k[i].is_zero() {
                    continue;
                }
                for j in 0..self.ambient {
                    let add = &k[i] * &row[j];
                    v[j] += add;
                }
            }
            rows.push(v);
        }
        Lattice::from_rows(self.ambient, rows)
    }

    /// Preimage of this lattice under the linear map x -> x . map,
    /// where map is an (a x ambient) matrix: { x in Z^a : x.map in self }.
    pub fn preimage(&self, map: &IntMat) -> Lattice {
        assert_eq!(map.cols, self.ambient);
        let a = map.rows;
        let mut stacked: Vec<Vec<BigInt>> = (0..a).map(|i| map.row(i)).collect();
        stacked.extend(self.basis.clone());
        if self.rank() == 0 {
            // preimage of the zero lattice is the kernel of the map
            let ker = left_kernel(map);
            return Lattice::from_rows(a, ker);
        }
        let m = IntMat::from_bigint_rows(stacked, self.ambient);
        let ker = left_kernel(&m);
        let rows: Vec<Vec<BigInt>> = ker.into_iter().map(|k| k[..a].to_vec()).collect();
        Lattice::from_rows(a, rows)
    }

    /// Invariant factors and free rank of Z^ambient modulo this lattice.
    pub fn quotient_invariants(&self) -> (Vec<BigInt>, usize) {
        if self.rank() == 0 {
            return (Vec::new(), self.ambient);
        }
        let snf = smith_normal_form(&self.basis_matrix());
        let torsion: Vec<BigInt> = snf.invariant_factors().to_vec();
        (torsion, self.ambient - snf.rank)
    }

    /// Smallest d >= 1 with d*v in the lattice; None when no multiple lands.
    pub fn order_in_quotient(&self, v: &[BigInt]) -> Option<BigInt> {
        assert_eq!(v.len(), self.ambient);
        if v.iter().all(|x| x.is_zero()) {
            return Some(BigInt::one());
        }
        if self.rank() == 0 {
            return None;
        }
        let snf = smith_normal_form(&self.basis_matrix());
        // c = v . V ; need y with y_j d_j = d c_j at pivot columns and
        // c_j = 0 elsewhere.
        let vm = IntMat::from_bigint_rows(vec![v.to_vec()], self.ambient);
        let c = vm.mul(&snf.v);
        let mut d = BigInt::one();
        for j in 0..self.ambient {
            let cj = &c[(0, j)];
            if j < snf.rank {
                if cj.is_zero() {
                    continue;
                }
                let dj = &snf.d[j];
                let g = dj.gcd(cj);
                d = d.lcm(&(dj / &g));
            } else if !cj.is_zero() {
                return None;
            }
        }
        Some(d)
    }
}

/// Basis of { x : x . A = 0 }.
pub fn left_kernel(a: &IntMat) -> Vec<Vec<BigInt>> {
    let (h, t) = hermite_normal_form(a);
    let mut out = Vec::new();
    for i in 0..h.rows {
        if (0..h.cols).all(|j| h[(i, j)].is_zero()) {
            out.push(t.row(i));
        }
    }
    out
}
