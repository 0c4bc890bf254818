"""
File: runner.py
Author: William Bowley
Version: 2.0
Date: 2026-10-17

Description:
    Runs tests:
    - core/test_matrix, core/test_signature, core/test_symplectic
    - maslov/test_lagrangian, maslov/test_index
    - meyer/test_cocycles
    - bundle/test_extension, bundle/test_bundle_signature
    - congruence/test_modular, congruence/test_enumeration
    - circle/test_dedekind, circle/test_covering
    - cli/test_codec, cli/test_main, cli/test_selftest
    - domain/test_library_manager

    Set SIGCOCYCLES_SLOW=1 to include the Sp(4, Z/4) enumeration.
"""

import sys
import unittest
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

import core.test_matrix as test_mat  # noqa: E402
import core.test_signature as test_sig  # noqa: E402
import core.test_symplectic as test_sp  # noqa: E402
import maslov.test_lagrangian as test_lag  # noqa: E402
import maslov.test_index as test_idx  # noqa: E402
import meyer.test_cocycles as test_coc  # noqa: E402
import bundle.test_extension as test_ext  # noqa: E402
import bundle.test_bundle_signature as test_bun  # noqa: E402
import congruence.test_modular as test_mod  # noqa: E402
import congruence.test_enumeration as test_enum  # noqa: E402
import circle.test_dedekind as test_ded  # noqa: E402
import circle.test_covering as test_cov  # noqa: E402
import cli.test_codec as test_codec  # noqa: E402
import cli.test_main as test_main  # noqa: E402
import cli.test_selftest as test_st  # noqa: E402
import domain.test_library_manager as test_lm  # noqa: E402

loader = unittest.TestLoader()
suite = unittest.TestSuite()

# core/test_matrix
suite.addTests(loader.loadTestsFromTestCase(test_mat.RationalEntries))
suite.addTests(loader.loadTestsFromTestCase(test_mat.Construction))
suite.addTests(loader.loadTestsFromTestCase(test_mat.Arithmetic))
suite.addTests(loader.loadTestsFromTestCase(test_mat.KernelBasis))
suite.addTests(loader.loadTestsFromTestCase(test_mat.ColumnSpaces))

# core/test_signature
suite.addTests(loader.loadTestsFromTestCase(test_sig.InertiaTriple))

# core/test_symplectic
suite.addTests(loader.loadTestsFromTestCase(test_sp.SymplecticPredicate))
suite.addTests(loader.loadTestsFromTestCase(test_sp.SymplecticInverse))
suite.addTests(loader.loadTestsFromTestCase(test_sp.Transvection))
suite.addTests(loader.loadTestsFromTestCase(test_sp.BlockGenerators))
suite.addTests(loader.loadTestsFromTestCase(test_sp.Commutator))
suite.addTests(loader.loadTestsFromTestCase(test_sp.Stabilization))
suite.addTests(loader.loadTestsFromTestCase(test_sp.SeededWords))

# maslov/test_lagrangian
suite.addTests(loader.loadTestsFromTestCase(test_lag.FromBasis))
suite.addTests(loader.loadTestsFromTestCase(test_lag.Images))
suite.addTests(loader.loadTestsFromTestCase(test_lag.Graphs))

# maslov/test_index
suite.addTests(loader.loadTestsFromTestCase(test_idx.PlaneLines))
suite.addTests(loader.loadTestsFromTestCase(test_idx.Directions))
suite.addTests(loader.loadTestsFromTestCase(test_idx.Radical))
suite.addTests(loader.loadTestsFromTestCase(test_idx.Invariance))

# meyer/test_cocycles
suite.addTests(loader.loadTestsFromTestCase(test_coc.MeyerValues))
suite.addTests(loader.loadTestsFromTestCase(test_coc.GraphRoute))
suite.addTests(loader.loadTestsFromTestCase(test_coc.MaslovValues))
suite.addTests(loader.loadTestsFromTestCase(test_coc.CocycleIdentity))
suite.addTests(loader.loadTestsFromTestCase(test_coc.Stabilization))
suite.addTests(loader.loadTestsFromTestCase(test_coc.CocycleObjects))

# bundle/test_extension
suite.addTests(loader.loadTestsFromTestCase(test_ext.Coefficients))
suite.addTests(loader.loadTestsFromTestCase(test_ext.GroupLaw))
suite.addTests(loader.loadTestsFromTestCase(test_ext.PlainFunctions))

# bundle/test_bundle_signature
suite.addTests(loader.loadTestsFromTestCase(test_bun.MonodromyData))
suite.addTests(loader.loadTestsFromTestCase(test_bun.Sampling))
suite.addTests(loader.loadTestsFromTestCase(test_bun.BundleSignature))
suite.addTests(loader.loadTestsFromTestCase(test_bun.TorsionSignature))
suite.addTests(loader.loadTestsFromTestCase(test_bun.ClassEvaluation))
suite.addTests(loader.loadTestsFromTestCase(test_bun.Residues))

# congruence/test_modular
suite.addTests(loader.loadTestsFromTestCase(test_mod.Reduction))
suite.addTests(loader.loadTestsFromTestCase(test_mod.ResidueMatrices))
suite.addTests(loader.loadTestsFromTestCase(test_mod.ParitySubgroups))
suite.addTests(loader.loadTestsFromTestCase(test_mod.OrderFormulas))

# congruence/test_enumeration
suite.addTests(loader.loadTestsFromTestCase(test_enum.Closure))
suite.addTests(loader.loadTestsFromTestCase(test_enum.Subgroups))
suite.addTests(loader.loadTestsFromTestCase(test_enum.BinaryCache))
suite.addTests(loader.loadTestsFromTestCase(test_enum.OrderTable))

# circle/test_dedekind
suite.addTests(loader.loadTestsFromTestCase(test_ded.Sawtooth))
suite.addTests(loader.loadTestsFromTestCase(test_ded.SineSigns))
suite.addTests(loader.loadTestsFromTestCase(test_ded.ClosedForms))
suite.addTests(loader.loadTestsFromTestCase(test_ded.Rotations))
suite.addTests(loader.loadTestsFromTestCase(test_ded.Calibration))

# circle/test_covering
suite.addTests(loader.loadTestsFromTestCase(test_cov.Cochains))
suite.addTests(loader.loadTestsFromTestCase(test_cov.Arrangements))
suite.addTests(loader.loadTestsFromTestCase(test_cov.CocycleCheck))
suite.addTests(loader.loadTestsFromTestCase(test_cov.CoveringNumbers))

# cli/test_codec
suite.addTests(loader.loadTestsFromTestCase(test_codec.Files))
suite.addTests(loader.loadTestsFromTestCase(test_codec.Matrices))
suite.addTests(loader.loadTestsFromTestCase(test_codec.Lagrangians))
suite.addTests(loader.loadTestsFromTestCase(test_codec.Monodromies))
suite.addTests(loader.loadTestsFromTestCase(test_codec.Cocycles))

# cli/test_main
suite.addTests(loader.loadTestsFromTestCase(test_main.MeyerCommand))
suite.addTests(loader.loadTestsFromTestCase(test_main.MaslovCommand))
suite.addTests(loader.loadTestsFromTestCase(test_main.BundleCommand))
suite.addTests(loader.loadTestsFromTestCase(test_main.MemberCommand))
suite.addTests(loader.loadTestsFromTestCase(test_main.OrderCommand))
suite.addTests(loader.loadTestsFromTestCase(test_main.CoveringCommand))
suite.addTests(loader.loadTestsFromTestCase(test_main.Usage))

# cli/test_selftest
suite.addTests(loader.loadTestsFromTestCase(test_st.Configuration))
suite.addTests(loader.loadTestsFromTestCase(test_st.Criteria))
suite.addTests(loader.loadTestsFromTestCase(test_st.CommandLineSuite))

# domain/test_library_manager
suite.addTests(loader.loadTestsFromTestCase(test_lm.ManagerTest))

runner = unittest.TextTestRunner(verbosity=2)

if __name__ == "__main__":
    result = runner.run(suite)
    sys.exit(not result.wasSuccessful())
