use super::{FiniteGroup, Quotient, Subgroup};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    Q,
    R,
    C,
}

impl Field {
    pub const ALL: [Field; 3] = [Field::Q, Field::R, Field::C];
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::Q => "Q",
            Field::R => "R",
            Field::C => "C",
        })
    }
}

impl FromStr for Field {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "Q" | "q" => Ok(Field::Q),
            "R" | "r" => Ok(Field::R),
            "C" | "c" => Ok(Field::C),
            _ => Err(format!("unknown field tag {s:?}; expected Q, R or C")),
        }
    }
}

/// Partition of the elements into F-conjugacy classes. Classes are ordered
/// by their least element, which is also the representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FClassPartition {
    pub field: Field,
    pub classes: Vec<Vec<u32>>,
    pub class_of: Vec<u32>,
}

impl FClassPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn rep(&self, c: usize) -> u32 {
        self.classes[c][0]
    }

    pub fn size(&self, c: usize) -> usize {
        self.classes[c].len()
    }

    fn from_labels(field: Field, labels: &[u32]) -> Self {
        // relabel by least element
        let mut map = vec![u32::MAX; labels.len()];
        let mut classes: Vec<Vec<u32>> = Vec::new();
        let mut class_of = vec![0u32; labels.len()];
        for (x, &l) in labels.iter().enumerate() {
            if map[l as usize] == u32::MAX {
                map[l as usize] = classes.len() as u32;
                classes.push(Vec::new());
            }
            let c = map[l as usize];
            classes[c as usize].push(x as u32);
            class_of[x] = c;
        }
        FClassPartition { field, classes, class_of }
    }
}

fn find(parent: &mut [u32], x: u32) -> u32 {
    let mut r = x;
    while parent[r as usize] != r {
        r = parent[r as usize];
    }
    let mut x = x;
    while parent[x as usize] != r {
        let next = parent[x as usize];
        parent[x as usize] = r;
        x = next;
    }
    r
}

fn union(parent: &mut [u32], a: u32, b: u32) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        parent[hi as usize] = lo;
    }
}

impl FiniteGroup {
    pub fn f_conjugacy_classes(&self, field: Field) -> FClassPartition {
        let n = self.order() as u32;
        let mut parent: Vec<u32> = (0..n).collect();
        for x in 0..n {
            for &g in self.generator_indices() {
                union(&mut parent, x, self.conj(x, g));
            }
            match field {
                Field::C => {}
                Field::R => union(&mut parent, x, self.inv(x)),
                Field::Q => {
                    let o = self.elem_order(x) as i64;
                    for k in 2..o {
                        if num_integer::gcd(k, o) == 1 {
                            union(&mut parent, x, self.pow(x, k));
                        }
                    }
                }
            }
        }
        let labels: Vec<u32> = (0..n).map(|x| find(&mut parent, x)).collect();
        FClassPartition::from_labels(field, &labels)
    }

    /// `C_F(g)`.
    pub fn centralizer_f(&self, g: u32, field: Field) -> Subgroup {
        let cyclic = self.closure(&[g]);
        let ginv = self.inv(g);
        let members: Vec<u32> = (0..self.order() as u32)
            .filter(|&x| {
                let c = self.conj(g, x);
                match field {
                    Field::C => c == g,
                    Field::R => c == g || c == ginv,
                    Field::Q => cyclic.contains(c),
                }
            })
            .collect();
        self.subgroup_from_members(&members)
    }

    /// `Z_F(g) = C_F(g)/⟨g⟩`.
    pub fn z_f(&self, g: u32, field: Field) -> Quotient {
        self.quotient(&self.centralizer_f(g, field), &self.closure(&[g]))
    }
}
