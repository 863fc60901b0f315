use std::collections::{BTreeMap, BTreeSet};

use aicrepair::transforms::{normalize_aic, normalize_rev};
use aicrepair::{
    enumerate, enumerate_rev, AicProgram, Database, Limits, RepairClass, Result, RevisionClass,
    RevisionProgram,
};

pub struct Relation {
    pub left: String,
    pub op: &'static str,
    pub right: String,
    pub holds: bool,
}

pub struct Table {
    /// Class tag and number of members, in class order.
    pub sizes: Vec<(String, usize)>,
    pub relations: Vec<Relation>,
}

impl Table {
    pub fn holds(&self) -> bool {
        self.relations.iter().all(|r| r.holds)
    }
}

/// The class members, keyed by tag, with members compared as rendered
/// strings so both sides share one representation.
type Classes = BTreeMap<String, BTreeSet<String>>;

const SUBSETS: [(&str, &str); 10] = [
    ("JR_N", "JR"),
    ("JR", "FR"),
    ("FR", "R"),
    ("JWR_N", "JWR"),
    ("JWR", "FWR"),
    ("FWR", "WR"),
    ("R", "WR"),
    ("FR", "FWR"),
    ("JR", "JWR"),
    ("JR_N", "JWR_N"),
];

const INVARIANT: [&str; 4] = ["WR", "R", "FWR", "FR"];

fn relations(classes: &Classes, rename: impl Fn(&str) -> String) -> Vec<Relation> {
    let get = |t: &str| &classes[&rename(t)];
    let mut out: Vec<Relation> = SUBSETS
        .iter()
        .map(|(l, r)| Relation {
            left: rename(l),
            op: "⊆",
            right: rename(r),
            holds: get(l).is_subset(get(r)),
        })
        .collect();
    for t in INVARIANT {
        let n = format!("{}^n", rename(t));
        out.push(Relation {
            left: rename(t),
            op: "=",
            holds: classes[&rename(t)] == classes[&n],
            right: n,
        });
    }
    out
}

pub fn aic(db: &Database, eta: &AicProgram, limits: &Limits) -> Result<Table> {
    let u = eta.universe();
    let mut classes = Classes::new();
    let mut sizes = Vec::new();
    let mut add = |tag: String, p: &AicProgram, class: RepairClass| -> Result<usize> {
        let members = enumerate(db, p, class, limits)?
            .repairs
            .iter()
            .map(|s| s.render(u))
            .collect::<BTreeSet<_>>();
        let n = members.len();
        classes.insert(tag, members);
        Ok(n)
    };
    for class in RepairClass::ALL {
        let n = add(class.tag().to_string(), eta, class)?;
        sizes.push((class.tag().to_string(), n));
    }
    let normal = normalize_aic(eta);
    for t in INVARIANT {
        let class: RepairClass = t.parse().expect("known tag");
        add(format!("{t}^n"), &normal, class)?;
    }
    Ok(Table {
        sizes,
        relations: relations(&classes, |t| t.to_string()),
    })
}

fn rev_tag(aic_tag: &str) -> String {
    let class: RepairClass = aic_tag.parse().expect("known tag");
    RevisionClass::ALL
        .into_iter()
        .find(|c| c.counterpart() == Some(class))
        .expect("every repair class has a revision counterpart")
        .tag()
        .to_string()
}

pub fn rev(db: &Database, p: &RevisionProgram, limits: &Limits) -> Result<Table> {
    let u = p.universe();
    let mut classes = Classes::new();
    let mut sizes = Vec::new();
    let mut add = |tag: String, p: &RevisionProgram, class: RevisionClass| -> Result<usize> {
        let members = enumerate_rev(p, db, class, limits)?
            .repairs
            .iter()
            .map(|s| s.render(u))
            .collect::<BTreeSet<_>>();
        let n = members.len();
        classes.insert(tag, members);
        Ok(n)
    };
    for class in RevisionClass::ALL {
        if class == RevisionClass::SupportedRevision && !p.is_normal() {
            continue;
        }
        let n = add(class.tag().to_string(), p, class)?;
        sizes.push((class.tag().to_string(), n));
    }
    let normal = normalize_rev(p);
    for t in INVARIANT {
        let tag = rev_tag(t);
        let class: RevisionClass = tag.parse().expect("known tag");
        add(format!("{tag}^n"), &normal, class)?;
    }
    let mut relations = relations(&classes, rev_tag);
    if p.is_normal() {
        relations.push(Relation {
            left: "FWRev".into(),
            op: "=",
            right: "SuppRev".into(),
            holds: classes["FWRev"] == classes["SuppRev"],
        });
    }
    Ok(Table { sizes, relations })
}
