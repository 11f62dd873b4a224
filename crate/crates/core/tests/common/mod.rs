//! Brute-force reference implementations working on a plain order matrix.
//! They share no code with the library beyond reading `leq` and the
//! involution.

#![allow(dead_code)]

use paraortho::{FinitePoset, OrthoPoset};

pub struct Raw {
    pub n: usize,
    pub le: Vec<Vec<bool>>,
    pub inv: Vec<usize>,
    pub labels: Vec<String>,
}

impl Raw {
    pub fn of(o: &OrthoPoset) -> Raw {
        let mut r = Raw::of_poset(o);
        r.inv = o.involution().to_vec();
        r
    }

    pub fn of_poset(p: &FinitePoset) -> Raw {
        let n = p.len();
        Raw {
            n,
            le: (0..n).map(|x| (0..n).map(|y| p.leq(x, y)).collect()).collect(),
            inv: (0..n).collect(),
            labels: p.labels().to_vec(),
        }
    }

    pub fn idx(&self, l: &str) -> usize {
        self.labels.iter().position(|s| s == l).unwrap_or_else(|| panic!("no element {l}"))
    }

    pub fn bottom(&self) -> usize {
        (0..self.n).find(|&b| (0..self.n).all(|x| self.le[b][x])).unwrap()
    }

    pub fn top(&self) -> usize {
        (0..self.n).find(|&t| (0..self.n).all(|x| self.le[x][t])).unwrap()
    }

    pub fn lower(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.n).filter(|&z| self.le[z][x] && self.le[z][y]).collect()
    }

    pub fn upper(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.n).filter(|&z| self.le[x][z] && self.le[y][z]).collect()
    }

    pub fn maximal(&self, s: &[usize]) -> Vec<usize> {
        s.iter().copied().filter(|&a| s.iter().all(|&b| b == a || !self.le[a][b])).collect()
    }

    pub fn minimal(&self, s: &[usize]) -> Vec<usize> {
        s.iter().copied().filter(|&a| s.iter().all(|&b| b == a || !self.le[b][a])).collect()
    }

    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        let u = self.upper(x, y);
        u.iter().copied().find(|&z| u.iter().all(|&w| self.le[z][w]))
    }

    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        let l = self.lower(x, y);
        l.iter().copied().find(|&z| l.iter().all(|&w| self.le[w][z]))
    }

    pub fn is_lattice(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.join(x, y).is_some() && self.meet(x, y).is_some()))
    }

    pub fn meet_zero(&self, x: usize, y: usize) -> bool {
        self.lower(x, y) == vec![self.bottom()]
    }

    pub fn orthogonal(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| !self.le[x][self.inv[y]] || self.join(x, y).is_some()))
    }

    pub fn paraorthomodular(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| !(self.le[x][y] && self.meet_zero(self.inv[x], y)) || x == y))
    }

    pub fn complemented_by_inv(&self) -> bool {
        (0..self.n).all(|x| self.meet(x, self.inv[x]) == Some(self.bottom()) && self.join(x, self.inv[x]) == Some(self.top()))
    }

    pub fn orthomodular(&self) -> bool {
        self.orthogonal()
            && self.complemented_by_inv()
            && (0..self.n).all(|x| {
                (0..self.n).all(|y| {
                    !self.le[x][y] || self.meet(y, self.inv[x]).and_then(|m| self.join(x, m)) == Some(y)
                })
            })
    }

    pub fn antitone_involution(&self, f: &[usize]) -> bool {
        (0..self.n).all(|x| f[f[x]] == x && (0..self.n).all(|y| !self.le[x][y] || self.le[f[y]][f[x]]))
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Order automorphisms by trying every permutation.
pub fn automorphisms(r: &Raw) -> Vec<Vec<usize>> {
    permutations(r.n)
        .into_iter()
        .filter(|s| (0..r.n).all(|x| (0..r.n).all(|y| r.le[x][y] == r.le[s[x]][s[y]])))
        .collect()
}

/// Whether two structures are isomorphic as posets with involution.
pub fn ortho_isomorphic(a: &Raw, b: &Raw) -> bool {
    a.n == b.n
        && permutations(a.n).into_iter().any(|s| {
            (0..a.n).all(|x| s[a.inv[x]] == b.inv[s[x]] && (0..a.n).all(|y| a.le[x][y] == b.le[s[x]][s[y]]))
        })
}
