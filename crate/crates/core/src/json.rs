//! JSON shapes for the library's values.
//!
//! Values that only make sense inside a group (elements, subgroups,
//! characters, dualities, complete enumerators) are decoded against a parent
//! supplied by the caller.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::characters::Character;
use crate::duality::Duality;
use crate::enumerators::{CompleteEnumerator, HammingEnumerator};
use crate::group::{GroupElement, GroupSpec, Subgroup};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub orders: Vec<u64>,
}

impl GroupJson {
    pub fn from_spec(spec: &GroupSpec) -> Self {
        GroupJson {
            orders: spec.orders().to_vec(),
        }
    }

    pub fn to_spec(&self) -> Result<GroupSpec> {
        GroupSpec::new(&self.orders)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub coords: Vec<u64>,
}

impl ElementJson {
    pub fn from_element(e: &GroupElement) -> Self {
        ElementJson {
            coords: e.coords().to_vec(),
        }
    }

    pub fn to_element(&self, parent: &GroupSpec) -> Result<GroupElement> {
        parent.element(&self.coords)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupJson {
    pub generators: Vec<Vec<u64>>,
    pub order: u64,
}

impl SubgroupJson {
    pub fn from_subgroup(h: &Subgroup) -> Self {
        SubgroupJson {
            generators: h.generators().iter().map(|g| g.coords().to_vec()).collect(),
            order: h.order(),
        }
    }

    pub fn to_subgroup(&self, parent: &GroupSpec) -> Result<Subgroup> {
        let gens = self
            .generators
            .iter()
            .map(|c| parent.element(c))
            .collect::<Result<Vec<_>>>()?;
        let h = Subgroup::closure(parent, &gens)?;
        if h.order() != self.order {
            return Err(Error::Internal(format!(
                "generators span a subgroup of order {}, not {}",
                h.order(),
                self.order
            )));
        }
        Ok(h)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterJson {
    pub etuple: Vec<u64>,
}

impl CharacterJson {
    pub fn from_character(pi: &Character) -> Self {
        CharacterJson {
            etuple: pi.etuple().to_vec(),
        }
    }

    pub fn to_character(&self, parent: &GroupSpec) -> Result<Character> {
        Character::new(parent, &self.etuple)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityJson {
    pub tau: Vec<Vec<u64>>,
}

impl DualityJson {
    pub fn from_duality(phi: &Duality) -> Self {
        DualityJson {
            tau: phi.tau().matrix().to_vec(),
        }
    }

    pub fn to_duality(&self, parent: &GroupSpec) -> Result<Duality> {
        let rows: Vec<Vec<i64>> = self.tau.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
        Duality::from_rows(parent, &rows)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HweJson {
    pub n: usize,
    pub coeffs: Vec<u64>,
}

impl HweJson {
    pub fn from_enumerator(e: &HammingEnumerator) -> Self {
        HweJson {
            n: e.n(),
            coeffs: e.coeffs().to_vec(),
        }
    }

    pub fn to_enumerator(&self) -> Result<HammingEnumerator> {
        HammingEnumerator::new(self.n, self.coeffs.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CweTermJson {
    /// Exponent of `Z_a`, keyed by the canonical text of `a`; zero counts are
    /// omitted.
    pub counts: BTreeMap<String, u64>,
    pub coeff: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CweJson {
    pub n: usize,
    pub terms: Vec<CweTermJson>,
}

impl CweJson {
    pub fn from_enumerator(e: &CompleteEnumerator) -> Self {
        let names: Vec<String> = e.base().elements().map(|a| a.to_string()).collect();
        let terms = e
            .terms()
            .iter()
            .rev()
            .map(|(counts, &coeff)| CweTermJson {
                counts: counts
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| (names[i].clone(), k))
                    .collect(),
                coeff,
            })
            .collect();
        CweJson { n: e.n(), terms }
    }

    pub fn to_enumerator(&self, base: &GroupSpec) -> Result<CompleteEnumerator> {
        let size = base.cardinality() as usize;
        let mut terms = BTreeMap::new();
        for term in &self.terms {
            let mut counts = vec![0u64; size];
            for (name, &k) in &term.counts {
                let a = base.parse_element(name)?;
                counts[base.index_of(&a) as usize] += k;
            }
            *terms.entry(counts).or_insert(0) += term.coeff;
        }
        CompleteEnumerator::new(base, self.n, terms)
    }
}

pub fn to_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("JSON shapes always serialize")
}

pub fn from_str<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        input: text.chars().take(80).collect(),
        group: format!("JSON ({e})"),
    })
}
