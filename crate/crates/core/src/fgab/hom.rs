//! Homomorphisms between canonical groups and their kernel, image and cokernel.

use num_bigint::BigInt;
use num_integer::Integer;

use super::{snf, AlgebraError, FgAbGroup, GroupElement, IntMatrix, Presentation};

/// A map between canonical groups given by an integer matrix.
///
/// Column `j` is the image of domain generator `j` in codomain coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homomorphism {
    domain: FgAbGroup,
    codomain: FgAbGroup,
    matrix: IntMatrix,
}

impl Homomorphism {
    /// Checks shape and that each torsion generator's order kills its image.
    pub fn new(domain: FgAbGroup, codomain: FgAbGroup, matrix: IntMatrix) -> Result<Self, AlgebraError> {
        if matrix.rows() != codomain.ngens() || matrix.cols() != domain.ngens() {
            return Err(AlgebraError::DimensionMismatch {
                context: "homomorphism matrix shape",
                expected: codomain.ngens() * domain.ngens(),
                found: matrix.rows() * matrix.cols(),
            });
        }
        for j in domain.rank()..domain.ngens() {
            let d = domain.generator_order(j);
            let image: Vec<BigInt> = matrix.column(j).iter().map(|x| x * &d).collect();
            if !codomain.is_zero_coords(&image) {
                return Err(AlgebraError::IllDefined {
                    generator: j,
                    order: d,
                    domain: domain.to_string(),
                    codomain: codomain.to_string(),
                });
            }
        }
        Ok(Homomorphism {
            domain,
            codomain,
            matrix,
        })
    }

    pub fn from_rows<R: AsRef<[i64]>>(
        domain: FgAbGroup,
        codomain: FgAbGroup,
        rows: &[R],
    ) -> Result<Self, AlgebraError> {
        let matrix = IntMatrix::from_rows(domain.ngens(), rows)?;
        Self::new(domain, codomain, matrix)
    }

    pub fn zero(domain: FgAbGroup, codomain: FgAbGroup) -> Self {
        let matrix = IntMatrix::zeros(codomain.ngens(), domain.ngens());
        Homomorphism {
            domain,
            codomain,
            matrix,
        }
    }

    pub fn identity(group: FgAbGroup) -> Self {
        let matrix = IntMatrix::identity(group.ngens());
        Homomorphism {
            domain: group.clone(),
            codomain: group,
            matrix,
        }
    }

    pub fn domain(&self) -> &FgAbGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FgAbGroup {
        &self.codomain
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// The same map with every torsion row reduced into `[0, d)`.
    pub fn normalized(&self) -> Homomorphism {
        let mut matrix = self.matrix.clone();
        for i in self.codomain.rank()..self.codomain.ngens() {
            let d = self.codomain.generator_order(i);
            for j in 0..matrix.cols() {
                matrix[(i, j)] = matrix[(i, j)].mod_floor(&d);
            }
        }
        Homomorphism {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            matrix,
        }
    }

    pub fn negated(&self) -> Homomorphism {
        Homomorphism {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: -&self.matrix,
        }
    }

    pub fn is_zero(&self) -> bool {
        (0..self.domain.ngens()).all(|j| self.codomain.is_zero_coords(&self.matrix.column(j)))
    }

    pub fn apply(&self, x: &GroupElement) -> Result<GroupElement, AlgebraError> {
        if x.group() != &self.domain {
            return Err(AlgebraError::GroupMismatch {
                left: x.group().to_string(),
                right: self.domain.to_string(),
            });
        }
        self.codomain.element(self.matrix.apply(x.coords()))
    }
}

/// Kernel, image and cokernel of a homomorphism, all canonical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub kernel: FgAbGroup,
    pub image: FgAbGroup,
    pub cokernel: FgAbGroup,
}

/// Integer basis (as columns) of `{ v : a v = 0 }`.
pub fn nullspace(a: &IntMatrix) -> IntMatrix {
    let s = snf(a);
    let r = s.rank();
    let cols: Vec<usize> = (r..a.cols()).collect();
    s.v.select_columns(&cols)
}

/// Computes kernel, image and cokernel of `f`.
///
/// With domain `Z^g / R_D`, codomain `Z^h / R_H` and lift `M`, the preimage
/// lattice `L = { x : M x in R_H }` comes from the nullspace of `[M | -R_H^T]`.
/// Then `im f = Z^g / L`, `ker f = L / R_D` and `coker f = Z^h / (M Z^g + R_H)`.
pub fn hom_decompose(f: &Homomorphism) -> Result<Decomposition, AlgebraError> {
    let g = f.domain.ngens();
    let h = f.codomain.ngens();

    let rel_d = f.domain.relation_matrix();
    let rel_h = f.codomain.relation_matrix();

    let lifted = f
        .matrix
        .hstack(&-&rel_h.transpose())
        .expect("codomain generator counts agree");
    let preimage = nullspace(&lifted).row_block(0..g);
    let k = preimage.cols();

    let image = Presentation::new(g, preimage.transpose())?.canonicalize();

    let in_domain = preimage
        .hstack(&-&rel_d.transpose())
        .expect("domain generator counts agree");
    let kernel_rel = nullspace(&in_domain).row_block(0..k);
    let kernel = Presentation::new(k, kernel_rel.transpose())?.canonicalize();

    let coker_rel = f
        .matrix
        .transpose()
        .vstack(&rel_h)
        .expect("codomain generator counts agree");
    let cokernel = Presentation::new(h, coker_rel)?.canonicalize();

    Ok(Decomposition {
        kernel,
        image,
        cokernel,
    })
}
