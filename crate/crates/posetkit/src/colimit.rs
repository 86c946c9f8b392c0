//! Colimits of finite diagrams of order embeddings.

use crate::iso::is_order_embedding;
use crate::poset::FinPoset;
use crate::PosetError;

/// A map `objects[source] → objects[target]` in a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramMap {
    pub source: usize,
    pub target: usize,
    pub map: Vec<usize>,
}

/// A finite diagram of posets and order embeddings.
#[derive(Clone, Debug, Default)]
pub struct Diagram {
    pub objects: Vec<FinPoset>,
    pub maps: Vec<DiagramMap>,
}

/// The colimit poset with its canonical maps and element provenance.
#[derive(Clone, Debug)]
pub struct Colimit {
    pub poset: FinPoset,
    /// `injections[i][x]` is the colimit element receiving element `x` of object `i`.
    pub injections: Vec<Vec<usize>>,
    /// Every `(object, element)` identified with each colimit element.
    pub members: Vec<Vec<(usize, usize)>>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Glues the objects of a diagram of injective order embeddings along its maps.
///
/// Elements identified by the maps become one element; the order is the one
/// generated by the orders of the objects. Fails if a map is not an order
/// embedding, or if the glued relation is not antisymmetric.
pub fn poset_colimit(diagram: &Diagram) -> Result<Colimit, PosetError> {
    let offsets: Vec<usize> = diagram
        .objects
        .iter()
        .scan(0, |acc, p| {
            let o = *acc;
            *acc += p.len();
            Some(o)
        })
        .collect();
    let total: usize = diagram.objects.iter().map(FinPoset::len).sum();
    let mut parent: Vec<usize> = (0..total).collect();
    for (i, m) in diagram.maps.iter().enumerate() {
        let (Some(src), Some(tgt)) = (diagram.objects.get(m.source), diagram.objects.get(m.target)) else {
            return Err(PosetError::BadDiagram { map: i });
        };
        if !is_order_embedding(src, tgt, &m.map) {
            return Err(PosetError::NotAnEmbedding { map: i });
        }
        for (x, &y) in m.map.iter().enumerate() {
            let (a, b) = (find(&mut parent, offsets[m.source] + x), find(&mut parent, offsets[m.target] + y));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut class = vec![usize::MAX; total];
    let mut count = 0;
    let mut rep_class = vec![usize::MAX; total];
    for g in 0..total {
        let r = find(&mut parent, g);
        if rep_class[r] == usize::MAX {
            rep_class[r] = count;
            count += 1;
        }
        class[g] = rep_class[r];
    }
    let mut members = vec![Vec::new(); count];
    let mut injections = Vec::with_capacity(diagram.objects.len());
    let mut relations = Vec::new();
    let mut names = vec![String::new(); count];
    for (i, p) in diagram.objects.iter().enumerate() {
        let inj: Vec<usize> = (0..p.len()).map(|x| class[offsets[i] + x]).collect();
        for (x, &c) in inj.iter().enumerate() {
            if members[c].is_empty() {
                names[c] = p.name(x).to_string();
            }
            members[c].push((i, x));
        }
        for (a, b) in p.covers() {
            relations.push((inj[a], inj[b]));
        }
        injections.push(inj);
    }
    relations.sort_unstable();
    relations.dedup();
    let poset = FinPoset::from_relations(count, &relations)?.with_names(names);
    Ok(Colimit { poset, injections, members })
}
