"""Tests for the transcribed families, tables and tensors."""

from __future__ import annotations

import pytest

from triop.catalogue import (
    AMENDED_FAMILIES,
    CYBE_ERRATA,
    CYBE_NONZERO,
    CYBE_ROWS,
    FAMILIES,
    INDUCED_ERRATA,
    INDUCED_TABLES,
    OPERATOR_ERRATA,
    family_name,
    load_catalogue,
    solution_name,
    transcribed_rows,
    transcribed_table,
)
from triop.prelie import induce_from_operator, table_diff
from triop.scalar import quadratic_field
from triop.trisys import TriAlgebra


class TestCatalogueData:
    """Tests for the shape of the frozen data."""

    def test_thirty_one_families(self) -> None:
        """Test the printed catalogue holds O1..O31 in natural order."""
        catalogue = load_catalogue()
        assert len(catalogue) == 31
        assert catalogue.names == [f"O{i}" for i in range(1, 32)]
        assert all(family.dim == 3 for family in catalogue)

    def test_amended_forms_are_extra(self) -> None:
        """Test amended families are added, not substituted."""
        names = load_catalogue(amended=True).names
        assert len(names) == 31 + len(AMENDED_FAMILIES)
        assert names.index("O29a") == names.index("O29") + 1

    def test_side_conditions_parsed(self) -> None:
        """Test families dividing by a parameter carry it as a side condition."""
        family = load_catalogue().get("O7")
        assert [str(c) for c in family.side_conditions] == ["a21"]

    def test_errata_name_known_entries(self) -> None:
        """Test every curated erratum refers to a transcribed entry."""
        assert OPERATOR_ERRATA <= FAMILIES.keys()
        assert INDUCED_ERRATA.keys() <= INDUCED_TABLES.keys()
        assert CYBE_ERRATA.keys() <= CYBE_ROWS.keys()
        assert CYBE_NONZERO == {solution_name(name) for name in OPERATOR_ERRATA}

    def test_name_mapping(self) -> None:
        """Test family and solution names map onto each other."""
        assert solution_name("O7") == "r7"
        assert family_name("r29") == "O29"

    def test_cached_per_field(self) -> None:
        """Test the catalogue is reparsed when d changes."""
        default = load_catalogue()
        assert load_catalogue() is default
        with quadratic_field(5):
            assert load_catalogue() is not default


class TestTranscribedTables:
    """Tests for the printed induced tables."""

    def test_values_lie_on_e1(self) -> None:
        """Test every printed product is a multiple of e1."""
        for name in INDUCED_TABLES:
            algebra = transcribed_table(name).algebra
            for _, coeffs in algebra.nonzero_products():
                assert coeffs[1].is_zero
                assert coeffs[2].is_zero

    def test_unknown_table(self) -> None:
        """Test an unknown family raises KeyError."""
        with pytest.raises(KeyError):
            transcribed_table("O99")

    def test_diffs_match_errata(self) -> None:
        """Test each printed table differs from computation exactly at the curated keys."""
        a3 = TriAlgebra.a3()
        catalogue = load_catalogue()
        for name in INDUCED_TABLES:
            computed = induce_from_operator(a3, catalogue.get(name), check=False)
            diff = table_diff(computed, transcribed_table(name).algebra)
            assert diff.keys() == INDUCED_ERRATA.get(name, ()), name


class TestTranscribedRows:
    """Tests for the printed Yang-Baxter images."""

    def test_rows_match_family_outside_errata(self) -> None:
        """Test printed images equal the family rows except where curated."""
        catalogue = load_catalogue()
        for name in CYBE_ROWS:
            printed = transcribed_rows(name)
            family = catalogue.get(family_name(name))
            differing = tuple(i + 1 for i in range(3) if printed.entries[i] != family.entries[i])
            assert differing == CYBE_ERRATA.get(name, ()), name
