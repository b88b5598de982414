"""Exact Hom/Ext calculus for Kronecker representations, annulus arc
models of tube categories, and silting/tilting gluing procedures."""

from .exactlin import Mat, Scalar, kernel_basis, rank, solve
from .kronecker import (DimVector, ExplicitRep, Generic, Lukas, Preinjective,
                        Preprojective, Pruefer, Regular, ar_translate,
                        bongartz_extension, decompose, dim_vector, euler_form,
                        explicit_rep, ext_dim, ext_dim_objects, hom_dim,
                        hom_dim_objects, is_tilting_module, parse_object,
                        quotient_by_idempotent_trace, render_object)
from .complexes import (ProjMorphism, ProjSum, TwoTermComplex, derived_hom_dim,
                        minimize, shifted_projective, stalk_complex,
                        universal_extension)
from .silting import (classify_silting, glue_kronecker, in_d_class,
                      in_positive_perp, in_y_class, phi_surjective,
                      presentation_of, presentation_of_object)
from .tube import (Arc, TubeCtx, crossings, enumerate_maximal_rigid,
                   ext_dim_arcs, extension_middle, hom_dim_arcs, is_rigid,
                   is_maximal_rigid, normalize, parse_arc, quotient_arcs,
                   render_arc, socle, subobject_arcs, tau_arc, top,
                   translation_quiver_dot)
from .cyclic_oracle import NilpRep, ext_dim_oracle, hom_dim_oracle, rep_of_arc
from .expansion import (ExpansionSpec, parse_expansion_spec, push_forward,
                        reduce_left, reduce_right)
from .glue import (GlueOutcome, Seed, TiltingSpec, TubeData, choose_seed,
                   enumerate_single_tube_specs, glue_left, glue_right,
                   parse_spec, round_trip, serialize_spec, verify_tilting_spec)

__all__ = [name for name in dir() if not name.startswith("_")]
