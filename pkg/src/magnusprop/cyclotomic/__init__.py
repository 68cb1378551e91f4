from .laurent import CycInt, DivisionError, LaurentPoly, ModTp
from .units import (NotAUnitError, build_f, build_fbar, cyc_inverse_unit, is_root_of_unity,
                    not_power_of_T, nu, residue_table, torsion_units)
from .wreath import (WitnessError, WreathElement, check_explicit_expansion_p5,
                     check_wreath_certificate, cocentraliser_ideal, ideal_membership_mod_Tp,
                     explicit_pair_p5, residue_field_index, verify_wreath_witness, wreath_commutator)
