use crate::error::{Error, Result};
use crate::exact::{FieldSpec, Scalar};

/// A finite group given by its Cayley table; element 0 need not be the
/// identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl Group {
    pub fn from_cayley(table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        let err = |m: String| Err(Error::Structure(format!("not a group: {m}")));
        if n == 0 {
            return err("empty table".into());
        }
        if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return err("table must be square with entries in range".into());
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return err(format!("associativity fails at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        let Some(identity) = (0..n).find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a)) else {
            return err("no identity element".into());
        };
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            match (0..n).find(|&b| table[a][b] == identity && table[b][a] == identity) {
                Some(b) => inverses.push(b),
                None => return err(format!("element {a} has no inverse")),
            }
        }
        let names = names.unwrap_or_else(|| (0..n).map(|i| format!("g{i}")).collect());
        if names.len() != n {
            return err("wrong number of element names".into());
        }
        Ok(Group { names, table, identity, inverses })
    }

    /// `Z/n` with elements `0, 1, ..., n-1` (element `k` is `g^k`).
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Structure("cyclic group of order 0".into()));
        }
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let names = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        Group::from_cayley(table, Some(names))
    }

    /// The symmetric group on three letters, elements as permutations in
    /// one-line notation; composition `(ab)(i) = a(b(i))`.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let names = vec!["e", "(01)", "(12)", "(02)", "(012)", "(021)"];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed");
        let table = perms.iter().map(|a| perms.iter().map(|b| index([a[b[0]], a[b[1]], a[b[2]]])).collect()).collect();
        Group::from_cayley(table, Some(names.into_iter().map(String::from).collect())).expect("S3 table is a group")
    }

    /// Parses `Z<n>` / `Zn` style names and `S3`.
    pub fn by_name(name: &str) -> Result<Self> {
        if name.eq_ignore_ascii_case("s3") {
            return Ok(Group::symmetric3());
        }
        let digits = name
            .strip_prefix('Z')
            .or_else(|| name.strip_prefix('z'))
            .ok_or_else(|| Error::Parse(format!("unknown group {name:?}")))?;
        let n: usize = digits.parse().map_err(|_| Error::Parse(format!("unknown group {name:?}")))?;
        Group::cyclic(n)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn conjugate(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(h, g), self.inverse(h))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// All homomorphisms `G → k^×`, as value tables indexed by element.
    pub fn characters(&self, field: FieldSpec) -> Vec<Vec<Scalar>> {
        let roots = field.roots_of_unity(self.order());
        let n = self.order();
        let mut found = Vec::new();
        let mut values: Vec<Option<Scalar>> = vec![None; n];
        values[self.identity] = Some(field.one());
        let order: Vec<usize> = (0..n).filter(|&g| g != self.identity).collect();
        self.extend_characters(&order, 0, &roots, &mut values, &mut found);
        found
    }

    fn extend_characters(
        &self,
        order: &[usize],
        pos: usize,
        roots: &[Scalar],
        values: &mut Vec<Option<Scalar>>,
        found: &mut Vec<Vec<Scalar>>,
    ) {
        let n = self.order();
        let consistent = |values: &Vec<Option<Scalar>>| {
            for a in 0..n {
                for b in 0..n {
                    if let (Some(x), Some(y), Some(z)) = (&values[a], &values[b], &values[self.mul(a, b)]) {
                        if &(x * y) != z {
                            return false;
                        }
                    }
                }
            }
            true
        };
        if pos == order.len() {
            if consistent(values) {
                found.push(values.iter().map(|v| v.clone().expect("assigned")).collect());
            }
            return;
        }
        for r in roots {
            values[order[pos]] = Some(r.clone());
            if consistent(values) {
                self.extend_characters(order, pos + 1, roots, values, found);
            }
        }
        values[order[pos]] = None;
    }
}
