use std::fmt;

use crate::error::Result;
use crate::field::PrimeField;
use crate::graph::Graph;

use super::geometry::{GeometricObject, Geometry};
use super::spec::BuildingSpec;

/// A Kneser graph `Γ` together with its apartment subgraph `Σ`.
#[derive(Clone)]
pub struct KneserGraph<F> {
    geometry: Geometry<F>,
    vertices: Vec<GeometricObject<F>>,
    graph: Graph,
    sigma: Vec<usize>,
}

impl<F: PrimeField> KneserGraph<F> {
    /// Enumerates the vertices of `geometry` and fills the adjacency rows.
    pub fn from_geometry(geometry: Geometry<F>) -> Self {
        let vertices = geometry.vertices();
        let graph = geometry.adjacency_graph(&vertices);
        let sigma = (0..vertices.len())
            .filter(|&i| geometry.in_apartment(&vertices[i]))
            .collect();
        KneserGraph {
            geometry,
            vertices,
            graph,
            sigma,
        }
    }

    pub fn spec(&self) -> &BuildingSpec {
        self.geometry.spec()
    }

    pub fn geometry(&self) -> &Geometry<F> {
        &self.geometry
    }

    pub fn vertices(&self) -> &[GeometricObject<F>] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &GeometricObject<F> {
        &self.vertices[i]
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Indices of the apartment vertices, increasing.
    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    /// `Σ` as a graph on `0..|Σ|`, in the order of [`KneserGraph::sigma`].
    pub fn sigma_graph(&self) -> Graph {
        self.graph.induced(&self.sigma)
    }

    pub fn index_of(&self, obj: &GeometricObject<F>) -> Option<usize> {
        self.vertices.binary_search(obj).ok()
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.graph.is_adjacent(i, j)
    }
}

impl<F: PrimeField> fmt::Debug for KneserGraph<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("KneserGraph")
            .field("spec", self.spec())
            .field("vertices", &self.vertices.len())
            .field("edges", &self.graph.edge_count())
            .field("sigma", &self.sigma.len())
            .finish()
    }
}

/// Builds `Γ` for a spec, rejecting flag types whose Kneser adjacency is not
/// defined within one type.
pub fn build<F: PrimeField>(spec: &BuildingSpec) -> Result<KneserGraph<F>> {
    spec.require_kneser_defined()?;
    Ok(KneserGraph::from_geometry(Geometry::new(spec)?))
}
