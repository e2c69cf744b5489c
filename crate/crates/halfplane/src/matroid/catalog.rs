//! Named matroids with the element numbering of their standard figures
//! (label `i + 1` is element `i`), plus parametric rank-3 transversal families.

use serde::Serialize;

use super::{transversal_matroid, Matroid, Presentation};
use crate::error::{Error, Result};

/// Whether the matroid has the half-plane property, as far as is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HppStatus {
    Yes,
    No,
    Unknown,
}

/// Niceness of a (co)transversal presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Niceness {
    Nice,
    NotNice,
    Unknown,
    /// Not transversal (resp. not cotransversal).
    NoPresentation,
}

/// Catalog metadata for one matroid.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub n: usize,
    pub rank: usize,
    pub hpp: HppStatus,
    pub transversal: Niceness,
    pub cotransversal: Niceness,
    /// Display label of each element, by index.
    pub labels: Vec<String>,
}

use HppStatus::{No, Unknown as HppUnknown, Yes};
use Niceness::{Nice, NoPresentation as Absent, NotNice, Unknown};

struct Named {
    name: &'static str,
    aliases: &'static [&'static str],
    hpp: HppStatus,
    transversal: Niceness,
    cotransversal: Niceness,
    build: fn() -> Result<Matroid>,
}

fn lines(n: usize, ls: &[&[usize]]) -> Result<Matroid> {
    let zero: Vec<Vec<usize>> = ls.iter().map(|l| l.iter().map(|&e| e - 1).collect()).collect();
    Matroid::rank3_from_lines(n, &zero)
}

fn non_bases(n: usize, r: usize, sets: &[&[usize]]) -> Result<Matroid> {
    let zero: Vec<Vec<usize>> = sets.iter().map(|l| l.iter().map(|&e| e - 1).collect()).collect();
    Matroid::from_non_bases(n, r, &zero)
}

const F7_LINES: [&[usize]; 7] = [&[1, 2, 3], &[3, 4, 5], &[1, 5, 6], &[1, 4, 7], &[2, 5, 7], &[3, 6, 7], &[2, 4, 6]];
const PAPPUS_LINES: [&[usize]; 9] =
    [&[1, 2, 3], &[4, 5, 6], &[2, 4, 7], &[3, 5, 9], &[3, 4, 8], &[1, 6, 8], &[1, 5, 7], &[2, 6, 9], &[7, 8, 9]];
const P8_NON_BASES: [&[usize]; 10] = [
    &[1, 2, 3, 8],
    &[1, 2, 4, 7],
    &[1, 3, 4, 6],
    &[2, 3, 4, 5],
    &[1, 4, 5, 8],
    &[2, 3, 6, 7],
    &[1, 5, 6, 7],
    &[2, 5, 6, 8],
    &[3, 5, 7, 8],
    &[4, 6, 7, 8],
];

fn p8_relaxed(skip: &[&[usize]]) -> Result<Matroid> {
    let kept: Vec<&[usize]> = P8_NON_BASES.iter().copied().filter(|s| !skip.contains(s)).collect();
    non_bases(8, 4, &kept)
}

fn non_pappus() -> Result<Matroid> {
    lines(9, &PAPPUS_LINES[..8])
}

const NAMED: &[Named] = &[
    Named { name: "M(K4)", aliases: &["MK4"], hpp: Yes, transversal: Absent, cotransversal: Absent, build: || lines(6, &[&[1, 2, 3], &[1, 5, 6], &[3, 4, 6], &[2, 4, 5]]) },
    Named { name: "W3", aliases: &[], hpp: Yes, transversal: NotNice, cotransversal: NotNice, build: || lines(6, &[&[1, 2, 3], &[3, 4, 5], &[1, 5, 6]]) },
    Named { name: "Q6", aliases: &[], hpp: Yes, transversal: Nice, cotransversal: Nice, build: || lines(6, &[&[1, 2, 3], &[1, 4, 5]]) },
    Named { name: "P6", aliases: &[], hpp: Yes, transversal: Nice, cotransversal: Nice, build: || lines(6, &[&[1, 2, 3]]) },
    Named { name: "F7", aliases: &[], hpp: No, transversal: Absent, cotransversal: Absent, build: || lines(7, &F7_LINES) },
    Named { name: "F7m", aliases: &[], hpp: No, transversal: Absent, cotransversal: Absent, build: || lines(7, &F7_LINES[..6]) },
    Named { name: "F7mm", aliases: &[], hpp: No, transversal: Absent, cotransversal: Absent, build: || lines(7, &[&[1, 2, 3], &[3, 4, 5], &[1, 5, 6], &[2, 5, 7], &[3, 6, 7]]) },
    Named { name: "MK4pe", aliases: &[], hpp: No, transversal: Absent, cotransversal: Absent, build: || lines(7, &[&[1, 2, 3], &[1, 5, 6], &[2, 5, 7], &[3, 6, 7]]) },
    Named { name: "F7m3", aliases: &[], hpp: No, transversal: Absent, cotransversal: NotNice, build: || lines(7, &[&[3, 4, 5], &[1, 4, 7], &[1, 2, 3], &[1, 5, 6]]) },
    Named { name: "F7m4", aliases: &[], hpp: HppUnknown, transversal: Absent, cotransversal: NotNice, build: || lines(7, &[&[1, 4, 7], &[1, 2, 3], &[1, 5, 6]]) },
    Named { name: "W3pe", aliases: &[], hpp: HppUnknown, transversal: NotNice, cotransversal: NotNice, build: || lines(7, &[&[3, 4, 5], &[1, 2, 3], &[1, 5, 6]]) },
    Named { name: "F7m5", aliases: &[], hpp: Yes, transversal: NotNice, cotransversal: Nice, build: || lines(7, &[&[1, 2, 3], &[1, 5, 6]]) },
    Named { name: "F7m6", aliases: &[], hpp: Yes, transversal: Nice, cotransversal: Unknown, build: || lines(7, &[&[1, 2, 3]]) },
    Named { name: "P7", aliases: &[], hpp: Yes, transversal: Absent, cotransversal: Absent, build: || lines(7, &[&[3, 4, 5], &[1, 4, 7], &[2, 6, 7], &[1, 2, 3], &[1, 5, 6]]) },
    Named { name: "P7p", aliases: &[], hpp: HppUnknown, transversal: Absent, cotransversal: NotNice, build: || lines(7, &[&[3, 4, 5], &[2, 6, 7], &[1, 2, 3], &[1, 5, 6]]) },
    Named { name: "P7pp", aliases: &[], hpp: Yes, transversal: NotNice, cotransversal: Nice, build: || lines(7, &[&[3, 4, 5], &[2, 6, 7], &[1, 2, 3]]) },
    Named { name: "P7ppp", aliases: &[], hpp: Yes, transversal: Nice, cotransversal: Unknown, build: || lines(7, &[&[3, 4, 5], &[2, 6, 7]]) },
    Named { name: "Q7", aliases: &[], hpp: Yes, transversal: Nice, cotransversal: NotNice, build: || lines(7, &[&[1, 2, 3], &[1, 4, 5, 6]]) },
    Named { name: "Q7del7", aliases: &[], hpp: Yes, transversal: Unknown, cotransversal: Unknown, build: || lines(6, &[&[1, 2, 3], &[1, 4, 5, 6]]) },
    Named { name: "S7", aliases: &[], hpp: Yes, transversal: Nice, cotransversal: Unknown, build: || lines(7, &[&[1, 2, 3, 4]]) },
    Named { name: "MK4plus", aliases: &[], hpp: Yes, transversal: Absent, cotransversal: Absent, build: || lines(7, &[&[1, 2, 3, 7], &[1, 5, 6], &[3, 4, 6], &[2, 4, 5]]) },
    Named { name: "W3plus", aliases: &[], hpp: HppUnknown, transversal: NotNice, cotransversal: NotNice, build: || lines(7, &[&[1, 2, 3, 7], &[3, 4, 5], &[1, 5, 6]]) },
    Named { name: "F7m4pe", aliases: &[], hpp: HppUnknown, transversal: Absent, cotransversal: NotNice, build: || lines(8, &[&[1, 4, 7], &[1, 2, 3], &[1, 5, 6]]) },
    Named { name: "W3pepf", aliases: &[], hpp: HppUnknown, transversal: NotNice, cotransversal: NotNice, build: || lines(8, &[&[3, 4, 5], &[1, 2, 3], &[1, 5, 6]]) },
    Named { name: "W3pluspe", aliases: &[], hpp: HppUnknown, transversal: NotNice, cotransversal: NotNice, build: || lines(8, &[&[1, 2, 3, 7], &[3, 4, 5], &[1, 5, 6]]) },
    Named { name: "P7ppe", aliases: &[], hpp: HppUnknown, transversal: Absent, cotransversal: NotNice, build: || lines(8, &[&[3, 4, 5], &[2, 6, 7], &[1, 2, 3], &[1, 5, 6]]) },
    Named { name: "P8", aliases: &[], hpp: No, transversal: Absent, cotransversal: Absent, build: || p8_relaxed(&[]) },
    Named { name: "P8p", aliases: &[], hpp: No, transversal: Absent, cotransversal: Absent, build: || p8_relaxed(&[&[1, 4, 5, 8]]) },
    Named { name: "P8pp", aliases: &[], hpp: No, transversal: Absent, cotransversal: Absent, build: || p8_relaxed(&[&[1, 4, 5, 8], &[2, 3, 6, 7]]) },
    Named { name: "V8", aliases: &["Vamos"], hpp: HppUnknown, transversal: Absent, cotransversal: Absent, build: || non_bases(8, 4, &[&[1, 2, 3, 4], &[1, 2, 5, 6], &[1, 2, 7, 8], &[3, 4, 5, 6], &[3, 4, 7, 8]]) },
    Named { name: "Pappus", aliases: &[], hpp: No, transversal: Absent, cotransversal: Absent, build: || lines(9, &PAPPUS_LINES) },
    Named { name: "NonPappus", aliases: &[], hpp: No, transversal: Absent, cotransversal: Absent, build: non_pappus },
    Named { name: "NonPappus_del1", aliases: &[], hpp: HppUnknown, transversal: Absent, cotransversal: NotNice, build: || non_pappus()?.delete(0) },
    Named { name: "NonPappus_del9", aliases: &[], hpp: HppUnknown, transversal: Absent, cotransversal: Absent, build: || non_pappus()?.delete(8) },
    Named { name: "NonPappus_del9_pe", aliases: &[], hpp: No, transversal: Absent, cotransversal: Absent, build: || lines(9, &PAPPUS_LINES[..8].iter().copied().filter(|l| !l.contains(&9)).collect::<Vec<_>>()) },
];

/// Display labels: `a, a', b, b', …` for the Vámos matroid, `1..n` otherwise.
fn labels_for(name: &str, n: usize) -> Vec<String> {
    if name == "V8" {
        ["a", "a'", "b", "b'", "c", "c'", "d", "d'"].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| i.to_string()).collect()
    }
}

/// One parsed family name such as `L_{3,3;2}` or `N_4`.
#[derive(Debug, PartialEq)]
struct FamilyName {
    letter: char,
    params: Vec<usize>,
    free: Option<usize>,
}

fn parse_family(name: &str) -> Option<FamilyName> {
    let mut chars = name.chars();
    let letter = chars.next()?;
    let rest = chars.as_str().strip_prefix('_')?;
    let body = rest.strip_prefix('{').and_then(|b| b.strip_suffix('}')).unwrap_or(rest);
    let (main, free) = match body.split_once(';') {
        Some((m, f)) => (m, Some(f.trim().parse().ok()?)),
        None => (body, None),
    };
    let params = main.split(',').map(|s| s.trim().parse().ok()).collect::<Option<Vec<usize>>>()?;
    Some(FamilyName { letter, params, free })
}

/// `U36`-style short names for uniform matroids with one-digit parameters.
fn parse_short_uniform(name: &str) -> Option<(usize, usize)> {
    let b = name.as_bytes();
    if b.len() == 3 && b[0] == b'U' && b[1].is_ascii_digit() && b[2].is_ascii_digit() {
        Some(((b[1] - b'0') as usize, (b[2] - b'0') as usize))
    } else {
        None
    }
}

/// Lines of a rank-3 family member, its ground-set size, and its class.
struct Rank3Family {
    n: usize,
    lines: Vec<Vec<usize>>,
}

fn need(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(what.to_string()))
    }
}

/// Build the point-line configuration of the C, D, E, F and L families.
///
/// Elements are numbered vertices first, then the extra points of each line
/// in order, then the free points.
fn rank3_family(f: &FamilyName) -> Result<Rank3Family> {
    let free = f.free.unwrap_or(0);
    let p = &f.params;
    let mut next = 0usize;
    let mut fresh = |k: usize| -> Vec<usize> {
        let v: Vec<usize> = (next..next + k).collect();
        next += k;
        v
    };
    let lines: Vec<Vec<usize>> = match (f.letter, p.len()) {
        ('C', 3) => {
            need(p.iter().all(|&k| k >= 2), "C needs line sizes at least 2")?;
            let v = fresh(3);
            let mut l1 = vec![v[0], v[1]];
            l1.extend(fresh(p[0] - 2));
            let mut l2 = vec![v[1], v[2]];
            l2.extend(fresh(p[1] - 2));
            let mut l3 = vec![v[2], v[0]];
            l3.extend(fresh(p[2] - 2));
            vec![l1, l2, l3]
        }
        ('D', 2) => {
            need(p.iter().all(|&k| k >= 2), "D needs line sizes at least 2")?;
            let v = fresh(1);
            let mut l1 = v.clone();
            l1.extend(fresh(p[0] - 1));
            let mut l2 = v;
            l2.extend(fresh(p[1] - 1));
            vec![l1, l2]
        }
        ('E', 3) => {
            need(p[0] >= 2 && p[1] >= 2 && p[2] >= 2, "E needs line sizes at least 2")?;
            let v = fresh(2);
            let mut mid = v.clone();
            mid.extend(fresh(p[1] - 2));
            let mut l1 = vec![v[0]];
            l1.extend(fresh(p[0] - 1));
            let mut l3 = vec![v[1]];
            l3.extend(fresh(p[2] - 1));
            vec![l1, mid, l3]
        }
        ('F', 3) => {
            need(p.iter().all(|&k| k >= 2), "F needs line sizes at least 2")?;
            let v = fresh(1);
            let mut l1 = v.clone();
            l1.extend(fresh(p[0] - 1));
            let mut l2 = v;
            l2.extend(fresh(p[1] - 1));
            let l3 = fresh(p[2]);
            vec![l1, l2, l3]
        }
        ('L', 1..=3) => {
            need(p.iter().all(|&k| k >= 2), "L needs line sizes at least 2")?;
            p.iter().map(|&k| fresh(k)).collect()
        }
        _ => return Err(Error::UnknownName(format!("{}_{{…}} with {} parameters", f.letter, p.len()))),
    };
    let n = next + free;
    need(n >= 3, "family member needs at least 3 elements")?;
    Ok(Rank3Family { n, lines })
}

/// Presentation of `M_{n1,n2}` on `0..n1+n2+1`.
fn m_presentation(n1: usize, n2: usize) -> Result<Presentation> {
    let t = n1 + n2;
    let ax: Vec<usize> = (0..=t).collect();
    let mut ay: Vec<usize> = (1..=n1).collect();
    ay.push(t + 1);
    let az: Vec<usize> = (n1 + 1..=t + 1).collect();
    Presentation::from_lists(t + 2, &[ax, ay, az])
}

/// Presentation of `N_k` on `0..2k` (labels `1..2k+1`).
fn n_presentation(k: usize) -> Result<Presentation> {
    need(k >= 1, "N_k needs k ≥ 1")?;
    let mut a0 = vec![1usize];
    a0.extend((1..=k).map(|j| 2 * j));
    a0.push(2 * k + 1);
    a0.dedup();
    let mut sets = vec![a0.iter().map(|e| e - 1).collect::<Vec<_>>()];
    sets.extend((1..=k).map(|j| vec![2 * j - 2, 2 * j - 1, 2 * j]));
    Presentation::from_lists(2 * k + 1, &sets)
}

fn family_entry(name: &str) -> Result<Option<(Matroid, CatalogEntry)>> {
    if let Some((r, n)) = parse_short_uniform(name) {
        return uniform_entry(name, r, n).map(Some);
    }
    let Some(f) = parse_family(name) else {
        return Ok(None);
    };
    let status = |hpp, transversal| (hpp, transversal, Unknown);
    let (m, (hpp, transversal, cotransversal)) = match (f.letter, f.params.as_slice(), f.free) {
        ('U', &[r, n], None) => return uniform_entry(name, r, n).map(Some),
        ('M', &[n1, n2], None) => {
            (transversal_matroid(&m_presentation(n1, n2)?), status(Yes, Nice))
        }
        ('N', &[k], None) => (transversal_matroid(&n_presentation(k)?), status(Yes, Nice)),
        ('C' | 'D' | 'E' | 'F' | 'L', _, _) => {
            let fam = rank3_family(&f)?;
            let m = Matroid::rank3_from_lines(fam.n, &fam.lines)
                .map_err(|_| Error::Precondition(format!("{name} does not define a rank-3 matroid")))?;
            let free = f.free.unwrap_or(0);
            let big = f.params.iter().all(|&k| k >= 3);
            let nice = match (f.letter, f.params.len()) {
                ('C' | 'E' | 'F', _) if big => Some(false),
                ('D', _) if big => Some(free <= 1),
                ('L', 3) if big => Some(free == 0),
                ('L', 2) if big => Some(free <= 2),
                ('L', 1) if big => Some(free <= 4),
                _ => None,
            };
            let st = match nice {
                Some(true) => status(Yes, Nice),
                Some(false) => status(HppUnknown, NotNice),
                None => status(HppUnknown, Unknown),
            };
            (m, st)
        }
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    let entry = CatalogEntry {
        name: name.to_string(),
        n: m.n(),
        rank: m.rank(),
        hpp,
        transversal,
        cotransversal,
        labels: labels_for(name, m.n()),
    };
    Ok(Some((m, entry)))
}

fn uniform_entry(name: &str, r: usize, n: usize) -> Result<(Matroid, CatalogEntry)> {
    let m = Matroid::uniform(r, n)?;
    let entry = CatalogEntry {
        name: name.to_string(),
        n,
        rank: r,
        hpp: Yes,
        transversal: Nice,
        cotransversal: Nice,
        labels: labels_for(name, n),
    };
    Ok((m, entry))
}

/// Resolve a catalog name to its matroid and metadata.
pub fn catalog_entry(name: &str) -> Result<(Matroid, CatalogEntry)> {
    let name = name.trim();
    if let Some(named) = NAMED.iter().find(|e| e.name == name || e.aliases.contains(&name)) {
        let m = (named.build)()?;
        let entry = CatalogEntry {
            name: named.name.to_string(),
            n: m.n(),
            rank: m.rank(),
            hpp: named.hpp,
            transversal: named.transversal,
            cotransversal: named.cotransversal,
            labels: labels_for(named.name, m.n()),
        };
        return Ok((m, entry));
    }
    family_entry(name)?.ok_or_else(|| Error::UnknownName(name.to_string()))
}

/// The matroid registered under `name`.
pub fn catalog(name: &str) -> Result<Matroid> {
    catalog_entry(name).map(|(m, _)| m)
}

/// Fixed catalog names, in listing order.
pub fn catalog_names() -> Vec<&'static str> {
    NAMED.iter().map(|e| e.name).collect()
}

/// Patterns accepted for the parametric families.
pub fn family_names() -> Vec<&'static str> {
    vec![
        "U_{r,n}",
        "C_{n1,n2,n3;n'}",
        "D_{n1,n2;n'}",
        "E_{n1,n2,n3;n'}",
        "F_{n1,n2,n3;n'}",
        "L_{n1,n2,n3;n'}",
        "L_{n1,n2;n'}",
        "L_{n1;n'}",
        "M_{n1,n2}",
        "N_k",
    ]
}

/// Standard presentations: `U_{r,n}` (r copies of the ground set),
/// `M_{n1,n2}`, `N_k`, the rank-3 families (complements of their lines,
/// padded with the ground set to three sets), `W3` and `U24_bipartite`.
pub fn catalog_presentation(name: &str) -> Result<Presentation> {
    let name = name.trim();
    match name {
        "W3" => return Presentation::from_lists(6, &[vec![3, 4, 5], vec![0, 1, 5], vec![1, 2, 3]]),
        "U24_bipartite" => return Presentation::from_lists(4, &[vec![0, 1, 2], vec![1, 2, 3]]),
        _ => {}
    }
    if let Some((r, n)) = parse_short_uniform(name) {
        return Presentation::from_lists(n, &vec![(0..n).collect::<Vec<_>>(); r]);
    }
    let f = parse_family(name).ok_or_else(|| Error::UnknownName(name.to_string()))?;
    match (f.letter, f.params.as_slice(), f.free) {
        ('U', &[r, n], None) => {
            need(r <= n, "U_{r,n} needs r ≤ n")?;
            Presentation::from_lists(n, &vec![(0..n).collect::<Vec<_>>(); r])
        }
        ('M', &[n1, n2], None) => m_presentation(n1, n2),
        ('N', &[k], None) => n_presentation(k),
        ('C' | 'D' | 'E' | 'F' | 'L', _, _) => {
            let fam = rank3_family(&f)?;
            let all: Vec<usize> = (0..fam.n).collect();
            let mut sets: Vec<Vec<usize>> =
                fam.lines.iter().map(|l| all.iter().copied().filter(|e| !l.contains(e)).collect()).collect();
            while sets.len() < 3 {
                sets.push(all.clone());
            }
            Presentation::from_lists(fam.n, &sets)
        }
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{graphic_matroid, Graph};
    use crate::subset;

    /// `M(K4)` as the cycle matroid of `K4` with edges `01, 02, 03, 12, 13, 23`.
    fn graphic_k4() -> Matroid {
        graphic_matroid(&Graph::complete(4).expect("small graph"))
    }

    #[test]
    fn base_counts() {
        assert_eq!(catalog("F7").unwrap().num_bases(), 28);
        assert_eq!(catalog("P8").unwrap().num_bases(), 60);
        assert_eq!(catalog("U_{3,7}").unwrap().num_bases(), 35);
        assert_eq!(catalog("U36").unwrap(), Matroid::uniform(3, 6).unwrap());
        assert_eq!(catalog("V8").unwrap().num_bases(), 65);
        assert!(matches!(catalog("NoSuch"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn every_fixed_entry_is_a_matroid() {
        for name in catalog_names() {
            let m = catalog(name).unwrap();
            let bases: Vec<u64> = m.bases().collect();
            assert!(super::super::verify_basis_axioms(m.n(), &bases).is_ok(), "{name}");
        }
    }

    #[test]
    fn named_matroid_is_graphic_k4() {
        // same matroid up to relabelling: compare invariants
        let a = catalog("M(K4)").unwrap();
        let b = graphic_k4();
        assert_eq!(a.num_bases(), b.num_bases());
        assert_eq!(a.rank(), b.rank());
        assert!(a.dual().num_bases() == 16 && a.connected());
    }

    #[test]
    fn relaxation_chain() {
        let f7 = catalog("F7").unwrap();
        let m = f7.relax(subset::from_elems(&[1, 3, 5], 7).unwrap()).unwrap();
        assert_eq!(m, catalog("F7m").unwrap());
        let mm = m.relax(subset::from_elems(&[0, 3, 6], 7).unwrap()).unwrap();
        assert_eq!(mm, catalog("F7mm").unwrap());
    }

    #[test]
    fn deletions_and_extensions() {
        assert_eq!(catalog("Q7").unwrap().delete(6).unwrap(), catalog("Q7del7").unwrap());
        assert_eq!(catalog("F7m4").unwrap().free_extension().unwrap(), catalog("F7m4pe").unwrap());
        assert_eq!(catalog("P7p").unwrap().free_extension().unwrap(), catalog("P7ppe").unwrap());
        assert_eq!(catalog("W3pe").unwrap().free_extension().unwrap(), catalog("W3pepf").unwrap());
        assert_eq!(catalog("W3plus").unwrap().free_extension().unwrap(), catalog("W3pluspe").unwrap());
        assert_eq!(
            catalog("NonPappus_del9").unwrap().free_extension().unwrap(),
            catalog("NonPappus_del9_pe").unwrap()
        );
    }

    #[test]
    fn families_match_their_presentations() {
        for name in [
            "C_{3,3,3;0}",
            "C_{3,4,3;1}",
            "D_{3,3;2}",
            "E_{3,3,3;0}",
            "F_{3,3,3;0}",
            "L_{3,3,3;1}",
            "L_{3,3;2}",
            "L_{3;5}",
            "M_{2,2}",
            "N_3",
            "U_{2,5}",
        ] {
            let direct = catalog(name).unwrap();
            let via = transversal_matroid(&catalog_presentation(name).unwrap());
            assert_eq!(direct, via, "{name}");
        }
    }

    #[test]
    fn family_identities() {
        let iso = |a: &str, b: &str| catalog(a).unwrap().is_isomorphic(&catalog(b).unwrap());
        assert!(iso("C_{3,3,3;0}", "W3"));
        assert!(iso("D_{3,3;2}", "F7m5"));
        assert!(iso("E_{3,3,3;0}", "P7pp"));
        assert!(catalog("N_3").unwrap().is_isomorphic(&catalog("P7pp").unwrap().dual()));
        assert!(!iso("W3", "P6"));
        assert_eq!(catalog("N_1").unwrap(), Matroid::uniform(2, 3).unwrap());
        assert_eq!(catalog("N_2").unwrap(), Matroid::uniform(3, 5).unwrap());
        assert_eq!(catalog("N_{2}").unwrap(), catalog("N_2").unwrap());
        assert!(catalog("L_{3;0}").is_err());
        assert_eq!(catalog("L_{3,3;0}").unwrap().n(), 6);
    }
}
