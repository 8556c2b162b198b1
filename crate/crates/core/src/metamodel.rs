//! Typed metamodels: node types with multiple inheritance, typed attributes and
//! typed references.
//!
//! Every metamodel carries the built-in abstract top type [`ANY`] at
//! [`TypeId::ANY`]; it is an implicit supertype of every declared type, so
//! references targeting `ANY` accept nodes of any type.
//!
//! Features are identified globally by [`AttrId`] / [`RefId`] (one per
//! declaration). Each type has a flattened feature list (inherited features
//! first, in supertype order, then its own) and a dense slot table mapping a
//! feature id to the position of that feature on nodes of the type.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::value::AttrKind;

/// Name of the built-in top type.
pub const ANY: &str = "ANY";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeId(pub u32);

impl TypeId {
    pub const ANY: TypeId = TypeId(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Global identifier of a declared attribute.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AttrId(pub u32);

/// Global identifier of a declared reference.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RefId(pub u32);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttributeDef {
    pub name: String,
    pub kind: AttrKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceDef {
    pub name: String,
    pub target: String,
    pub containment: bool,
    pub many: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeTypeDef {
    pub name: String,
    pub is_abstract: bool,
    pub supertypes: Vec<String>,
    pub attributes: Vec<AttributeDef>,
    pub references: Vec<ReferenceDef>,
}

impl NodeTypeDef {
    pub fn new(name: impl Into<String>) -> Self {
        NodeTypeDef {
            name: name.into(),
            is_abstract: false,
            supertypes: Vec::new(),
            attributes: Vec::new(),
            references: Vec::new(),
        }
    }

    pub fn abstract_(mut self) -> Self {
        self.is_abstract = true;
        self
    }

    pub fn extends(mut self, sup: impl Into<String>) -> Self {
        self.supertypes.push(sup.into());
        self
    }

    pub fn attr(mut self, name: impl Into<String>, kind: AttrKind) -> Self {
        self.attributes.push(AttributeDef {
            name: name.into(),
            kind,
        });
        self
    }

    pub fn reference(
        mut self,
        name: impl Into<String>,
        target: impl Into<String>,
        many: bool,
    ) -> Self {
        self.references.push(ReferenceDef {
            name: name.into(),
            target: target.into(),
            containment: false,
            many,
        });
        self
    }

    pub fn contains(
        mut self,
        name: impl Into<String>,
        target: impl Into<String>,
        many: bool,
    ) -> Self {
        self.references.push(ReferenceDef {
            name: name.into(),
            target: target.into(),
            containment: true,
            many,
        });
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetamodelError {
    #[error("duplicate type `{0}`")]
    DuplicateType(String),
    #[error("type `{0}` is reserved")]
    ReservedType(String),
    #[error("type `{ty}` names unknown supertype `{supertype}`")]
    UnknownSupertype { ty: String, supertype: String },
    #[error("reference `{ty}.{reference}` targets unknown type `{target}`")]
    UnknownTarget {
        ty: String,
        reference: String,
        target: String,
    },
    #[error("supertype cycle through `{0}`")]
    InheritanceCycle(String),
    #[error("feature `{feature}` declared more than once in the flattened features of `{ty}`")]
    DuplicateFeature { ty: String, feature: String },
    #[error("unknown type `{0}`")]
    UnknownType(String),
}

#[derive(Clone, Debug)]
pub struct AttrInfo {
    pub name: String,
    pub kind: AttrKind,
    pub owner: TypeId,
}

#[derive(Clone, Debug)]
pub struct RefInfo {
    pub name: String,
    pub target: TypeId,
    pub containment: bool,
    pub many: bool,
    pub owner: TypeId,
}

#[derive(Clone, Debug)]
struct TypeInfo {
    def: NodeTypeDef,
    supertypes: Vec<TypeId>,
    attrs: Vec<AttrId>,
    refs: Vec<RefId>,
    attr_by_name: HashMap<String, AttrId>,
    ref_by_name: HashMap<String, RefId>,
    /// Indexed by `AttrId`; position in `attrs`.
    attr_slot: Vec<Option<u16>>,
    /// Indexed by `RefId`; position in `refs`.
    ref_slot: Vec<Option<u16>>,
    concrete_subtypes: Vec<TypeId>,
}

/// A validated metamodel.
#[derive(Clone, Debug)]
pub struct Metamodel {
    name: String,
    types: Vec<TypeInfo>,
    by_name: HashMap<String, TypeId>,
    /// `conforms[sub][sup]`
    conforms: Vec<Vec<bool>>,
    attrs: Vec<AttrInfo>,
    refs: Vec<RefInfo>,
}

impl Metamodel {
    pub fn new(name: impl Into<String>, defs: Vec<NodeTypeDef>) -> Result<Self, MetamodelError> {
        let mut all = Vec::with_capacity(defs.len() + 1);
        all.push(NodeTypeDef::new(ANY).abstract_());
        let mut by_name = HashMap::new();
        by_name.insert(ANY.to_owned(), TypeId::ANY);
        for def in defs {
            if def.name == ANY {
                return Err(MetamodelError::ReservedType(def.name));
            }
            if by_name.contains_key(&def.name) {
                return Err(MetamodelError::DuplicateType(def.name));
            }
            by_name.insert(def.name.clone(), TypeId(all.len() as u32));
            all.push(def);
        }

        // Resolve supertypes; ANY is implicit for every declared type.
        let mut supers: Vec<Vec<TypeId>> = Vec::with_capacity(all.len());
        for (i, def) in all.iter().enumerate() {
            let mut s = Vec::new();
            for name in &def.supertypes {
                let id = *by_name
                    .get(name)
                    .ok_or_else(|| MetamodelError::UnknownSupertype {
                        ty: def.name.clone(),
                        supertype: name.clone(),
                    })?;
                if !s.contains(&id) {
                    s.push(id);
                }
            }
            if i != 0 && !s.contains(&TypeId::ANY) {
                s.push(TypeId::ANY);
            }
            supers.push(s);
        }

        // Reflexive-transitive closure with cycle detection.
        let n = all.len();
        let mut conforms = vec![vec![false; n]; n];
        for (t, row) in conforms.iter_mut().enumerate() {
            let mut stack = vec![t];
            while let Some(cur) = stack.pop() {
                if row[cur] {
                    continue;
                }
                row[cur] = true;
                for s in &supers[cur] {
                    if s.index() == t {
                        return Err(MetamodelError::InheritanceCycle(all[t].name.clone()));
                    }
                    stack.push(s.index());
                }
            }
        }

        // Declared features get global ids in declaration order.
        let mut attrs = Vec::new();
        let mut refs = Vec::new();
        let mut own_attrs: Vec<Vec<AttrId>> = vec![Vec::new(); n];
        let mut own_refs: Vec<Vec<RefId>> = vec![Vec::new(); n];
        for (i, def) in all.iter().enumerate() {
            for a in &def.attributes {
                own_attrs[i].push(AttrId(attrs.len() as u32));
                attrs.push(AttrInfo {
                    name: a.name.clone(),
                    kind: a.kind,
                    owner: TypeId(i as u32),
                });
            }
            for r in &def.references {
                let target =
                    *by_name
                        .get(&r.target)
                        .ok_or_else(|| MetamodelError::UnknownTarget {
                            ty: def.name.clone(),
                            reference: r.name.clone(),
                            target: r.target.clone(),
                        })?;
                own_refs[i].push(RefId(refs.len() as u32));
                refs.push(RefInfo {
                    name: r.name.clone(),
                    target,
                    containment: r.containment,
                    many: r.many,
                    owner: TypeId(i as u32),
                });
            }
        }

        let mut types = Vec::with_capacity(n);
        for (i, def) in all.into_iter().enumerate() {
            let mut order = Vec::new();
            linearize(i, &supers, &mut order);
            let mut flat_attrs = Vec::new();
            let mut flat_refs = Vec::new();
            for t in order {
                for a in &own_attrs[t] {
                    if !flat_attrs.contains(a) {
                        flat_attrs.push(*a);
                    }
                }
                for r in &own_refs[t] {
                    if !flat_refs.contains(r) {
                        flat_refs.push(*r);
                    }
                }
            }
            let mut attr_by_name = HashMap::new();
            let mut ref_by_name = HashMap::new();
            for a in &flat_attrs {
                let name = &attrs[a.0 as usize].name;
                if attr_by_name.insert(name.clone(), *a).is_some() {
                    return Err(MetamodelError::DuplicateFeature {
                        ty: def.name,
                        feature: name.clone(),
                    });
                }
            }
            for r in &flat_refs {
                let name = &refs[r.0 as usize].name;
                if ref_by_name.insert(name.clone(), *r).is_some() || attr_by_name.contains_key(name)
                {
                    return Err(MetamodelError::DuplicateFeature {
                        ty: def.name,
                        feature: name.clone(),
                    });
                }
            }
            let mut attr_slot = vec![None; attrs.len()];
            for (slot, a) in flat_attrs.iter().enumerate() {
                attr_slot[a.0 as usize] = Some(slot as u16);
            }
            let mut ref_slot = vec![None; refs.len()];
            for (slot, r) in flat_refs.iter().enumerate() {
                ref_slot[r.0 as usize] = Some(slot as u16);
            }
            types.push(TypeInfo {
                def,
                supertypes: supers[i].clone(),
                attrs: flat_attrs,
                refs: flat_refs,
                attr_by_name,
                ref_by_name,
                attr_slot,
                ref_slot,
                concrete_subtypes: Vec::new(),
            });
        }
        for sup in 0..n {
            let subs = (0..n)
                .filter(|&sub| conforms[sub][sup] && !types[sub].def.is_abstract)
                .map(|sub| TypeId(sub as u32))
                .collect();
            types[sup].concrete_subtypes = subs;
        }

        Ok(Metamodel {
            name: name.into(),
            types,
            by_name,
            conforms,
            attrs,
            refs,
        })
    }

    /// Union of several metamodels under a new name. Type names must be
    /// disjoint; references may target types from any part.
    pub fn compose(name: impl Into<String>, parts: &[&Metamodel]) -> Result<Self, MetamodelError> {
        let defs = parts
            .iter()
            .flat_map(|mm| mm.type_defs().cloned())
            .collect();
        Metamodel::new(name, defs)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Declared types, excluding the built-in top type.
    pub fn type_defs(&self) -> impl Iterator<Item = &NodeTypeDef> {
        self.types.iter().skip(1).map(|t| &t.def)
    }

    /// All type ids including [`TypeId::ANY`].
    pub fn type_ids(&self) -> impl Iterator<Item = TypeId> {
        (0..self.types.len() as u32).map(TypeId)
    }

    pub fn type_count(&self) -> usize {
        self.types.len()
    }

    pub fn type_id(&self, name: &str) -> Option<TypeId> {
        self.by_name.get(name).copied()
    }

    pub fn type_name(&self, ty: TypeId) -> &str {
        &self.types[ty.index()].def.name
    }

    pub fn is_abstract(&self, ty: TypeId) -> bool {
        self.types[ty.index()].def.is_abstract
    }

    pub fn supertypes(&self, ty: TypeId) -> &[TypeId] {
        &self.types[ty.index()].supertypes
    }

    pub fn conforms(&self, sub: TypeId, sup: TypeId) -> bool {
        self.conforms[sub.index()][sup.index()]
    }

    pub fn conforms_by_name(&self, sub: &str, sup: &str) -> Result<bool, MetamodelError> {
        let a = self
            .type_id(sub)
            .ok_or_else(|| MetamodelError::UnknownType(sub.to_owned()))?;
        let b = self
            .type_id(sup)
            .ok_or_else(|| MetamodelError::UnknownType(sup.to_owned()))?;
        Ok(self.conforms(a, b))
    }

    /// Non-abstract types conforming to `ty`, in declaration order.
    pub fn concrete_subtypes(&self, ty: TypeId) -> &[TypeId] {
        &self.types[ty.index()].concrete_subtypes
    }

    pub fn attribute(&self, ty: TypeId, name: &str) -> Option<AttrId> {
        self.types[ty.index()].attr_by_name.get(name).copied()
    }

    pub fn reference(&self, ty: TypeId, name: &str) -> Option<RefId> {
        self.types[ty.index()].ref_by_name.get(name).copied()
    }

    pub fn attr_info(&self, id: AttrId) -> &AttrInfo {
        &self.attrs[id.0 as usize]
    }

    pub fn ref_info(&self, id: RefId) -> &RefInfo {
        &self.refs[id.0 as usize]
    }

    /// Flattened attributes of `ty` in slot order.
    pub fn attrs_of(&self, ty: TypeId) -> &[AttrId] {
        &self.types[ty.index()].attrs
    }

    /// Flattened references of `ty` in slot order.
    pub fn refs_of(&self, ty: TypeId) -> &[RefId] {
        &self.types[ty.index()].refs
    }

    pub fn attr_slot(&self, ty: TypeId, id: AttrId) -> Option<usize> {
        self.types[ty.index()]
            .attr_slot
            .get(id.0 as usize)
            .copied()
            .flatten()
            .map(usize::from)
    }

    pub fn ref_slot(&self, ty: TypeId, id: RefId) -> Option<usize> {
        self.types[ty.index()]
            .ref_slot
            .get(id.0 as usize)
            .copied()
            .flatten()
            .map(usize::from)
    }

    /// Two metamodels are interchangeable for graphs and rules when they
    /// declare the same types in the same order.
    pub fn same_layout(&self, other: &Metamodel) -> bool {
        std::ptr::eq(self, other)
            || (self.types.len() == other.types.len()
                && self
                    .types
                    .iter()
                    .zip(&other.types)
                    .all(|(a, b)| a.def == b.def))
    }
}

fn linearize(t: usize, supers: &[Vec<TypeId>], out: &mut Vec<usize>) {
    for s in &supers[t] {
        linearize(s.index(), supers, out);
    }
    if !out.contains(&t) {
        out.push(t);
    }
}

impl fmt::Display for Metamodel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "metamodel {} ({} types)",
            self.name,
            self.types.len() - 1
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Metamodel {
        Metamodel::new(
            "m",
            vec![
                NodeTypeDef::new("Named")
                    .abstract_()
                    .attr("name", AttrKind::String),
                NodeTypeDef::new("Container")
                    .abstract_()
                    .contains("items", "Item", true),
                NodeTypeDef::new("Item").abstract_(),
                NodeTypeDef::new("Method")
                    .extends("Container")
                    .extends("Named"),
                NodeTypeDef::new("Leaf")
                    .extends("Item")
                    .attr("size", AttrKind::Integer),
            ],
        )
        .unwrap()
    }

    #[test]
    fn conformance_closure() {
        let mm = sample();
        assert!(mm.conforms_by_name("Method", "Container").unwrap());
        assert!(mm.conforms_by_name("Method", "Named").unwrap());
        assert!(mm.conforms_by_name("Leaf", "Leaf").unwrap());
        assert!(mm.conforms_by_name("Leaf", ANY).unwrap());
        assert!(!mm.conforms_by_name("Container", "Method").unwrap());
        assert!(mm.conforms_by_name("Nope", ANY).is_err());
    }

    #[test]
    fn flattened_features_follow_supertype_order() {
        let mm = sample();
        let m = mm.type_id("Method").unwrap();
        let names: Vec<_> = mm
            .refs_of(m)
            .iter()
            .map(|r| mm.ref_info(*r).name.clone())
            .collect();
        assert_eq!(names, ["items"]);
        let attrs: Vec<_> = mm
            .attrs_of(m)
            .iter()
            .map(|a| mm.attr_info(*a).name.clone())
            .collect();
        assert_eq!(attrs, ["name"]);
        let container = mm.type_id("Container").unwrap();
        let items = mm.reference(container, "items").unwrap();
        assert_eq!(mm.ref_slot(m, items), Some(0));
    }

    #[test]
    fn concrete_subtypes_skip_abstract() {
        let mm = sample();
        let item = mm.type_id("Item").unwrap();
        let subs: Vec<_> = mm
            .concrete_subtypes(item)
            .iter()
            .map(|t| mm.type_name(*t))
            .collect();
        assert_eq!(subs, ["Leaf"]);
    }

    #[test]
    fn rejects_cycles_and_unknowns() {
        let cyc = Metamodel::new(
            "c",
            vec![
                NodeTypeDef::new("A").extends("B"),
                NodeTypeDef::new("B").extends("A"),
            ],
        );
        assert!(matches!(cyc, Err(MetamodelError::InheritanceCycle(_))));
        let unk = Metamodel::new(
            "u",
            vec![NodeTypeDef::new("A").reference("r", "Zed", false)],
        );
        assert!(matches!(unk, Err(MetamodelError::UnknownTarget { .. })));
        let dup = Metamodel::new(
            "d",
            vec![
                NodeTypeDef::new("A").attr("x", AttrKind::Integer),
                NodeTypeDef::new("B")
                    .extends("A")
                    .attr("x", AttrKind::String),
            ],
        );
        assert!(matches!(dup, Err(MetamodelError::DuplicateFeature { .. })));
        assert!(matches!(
            Metamodel::new("r", vec![NodeTypeDef::new(ANY)]),
            Err(MetamodelError::ReservedType(_))
        ));
    }

    #[test]
    fn compose_resolves_across_parts() {
        let a = Metamodel::new("a", vec![NodeTypeDef::new("A")]).unwrap();
        let b = Metamodel::new(
            "b",
            vec![NodeTypeDef::new("T").reference("source", ANY, true)],
        )
        .unwrap();
        let ab = Metamodel::compose("ab", &[&a, &b]).unwrap();
        assert_eq!(ab.type_count(), 3);
        assert!(Metamodel::compose("aa", &[&a, &a]).is_err());
    }
}
