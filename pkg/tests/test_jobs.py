"""
Tests for Jobs Module
"""

import json

import pytest

from core.config import Settings
from core.errors import DomainError
from core.jobs import get_job, list_jobs, COMMANDS
from core.jobs.base import dumps_json
from core.jobs.build_surface import BuildSurfaceJob
from core.jobs.export_mesh import ExportMeshJob
from core.jobs.genus_table import FORMULA_ONLY, GenusTableJob
from core.jobs.mobius_search import MobiusSearchJob
from core.jobs.parallel_family import ParallelFamilyJob
from core.jobs.registry import _command_name, register_job
from core.jobs.verify_surface import VerifySurfaceJob
from core.result import ResultStatus


class TestJobRegistry:
    """Tests for job registry functionality."""

    def test_commands_registered(self):
        """Test every command maps to its job class."""
        assert get_job("build") is BuildSurfaceJob
        assert get_job("family") is ParallelFamilyJob
        assert get_job("verify") is VerifySurfaceJob
        assert get_job("table") is GenusTableJob
        assert get_job("export") is ExportMeshJob
        assert get_job("mobius") is MobiusSearchJob

    def test_list_jobs(self):
        """Test listing is sorted by name."""
        names = [j["name"] for j in list_jobs()]
        assert names == sorted(COMMANDS)
        assert {"build", "family", "verify", "table", "export", "mobius"} <= set(names)

    def test_filter_by_tag(self):
        """Test tag filtering."""
        names = {j["name"] for j in list_jobs(tags=["mesh"])}
        assert names == {"export"}

    def test_job_metadata(self):
        """Test job metadata from decorator."""
        assert BuildSurfaceJob._job_name == "build"
        assert "certify" in BuildSurfaceJob._job_tags

    def test_unknown_job(self):
        """Test getting an unknown job."""
        assert get_job("nonexistent_job") is None

    def test_default_name(self):
        """Test the name derived from a class name."""
        assert _command_name("GenusTableJob") == "genus_table"
        assert _command_name("OFFExportJob") == "off_export"

    def test_name_clash(self):
        """Test a second class cannot take a registered name."""
        with pytest.raises(ValueError, match="already bound"):
            @register_job(name="build")
            class OtherBuildJob(BuildSurfaceJob):
                pass

    def test_invalid_name(self):
        """Test names must be usable as subcommands."""
        with pytest.raises(ValueError):
            @register_job(name="Build-Surface")
            class BadNameJob(BuildSurfaceJob):
                pass


class TestBuildSurfaceJob:
    """Tests for BuildSurfaceJob."""

    def test_torus(self, test_context, mock_logger):
        """Test T(1234) has 16 faces and genus 1 with every certificate passing."""
        job = BuildSurfaceJob(test_context, log=mock_logger)
        report = job.execute(n=4)

        assert report.status == ResultStatus.SUCCESS
        assert report.certificates_failed == 0
        assert report.artifacts["face_count"] == 16
        assert report.genus["T(1,2,3,4)"]["euler"] == 1
        assert report.genus["T(1,2,3,4)"]["traced"] == 1
        assert report.genus["T(1,2,3,4)"]["formula"] == 1
        mock_logger.command_started.assert_called_once()
        mock_logger.command_completed.assert_called_once()

    def test_certificate_names(self, test_context, mock_logger):
        """Test the certificate set for a Hamiltonian surface."""
        report = BuildSurfaceJob(test_context, log=mock_logger).execute(n=5, cycle="1,3,5,2,4")
        assert [c.name for c in report.certificates] == [
            "closed_surface",
            "orientable",
            "dual_oracle_agreement",
            "genus_matches_formula",
            "lower_bound_tight",
            "black_vertex_agreement",
        ]
        assert report.parameters == {"n": 5, "cycle": [1, 3, 5, 2, 4]}

    def test_write_out(self, test_context, mock_logger, tmp_path):
        """Test --out writes the surface JSON instead of embedding it."""
        path = tmp_path / "t4.json"
        report = BuildSurfaceJob(test_context, log=mock_logger).execute(n=4, out=str(path))
        assert "surface" not in report.artifacts
        assert report.artifacts["surface_file"] == str(path)
        assert len(json.loads(path.read_text())["faces"]) == 16

    def test_bad_cycle(self, test_context, mock_logger):
        """Test a non-Hamiltonian cycle raises and logs the failure."""
        job = BuildSurfaceJob(test_context, log=mock_logger)
        with pytest.raises(DomainError):
            job.execute(n=5, cycle="1,2,3")
        mock_logger.command_failed.assert_called_once()

    def test_invalid_settings(self, test_context, mock_logger):
        """Test setup refuses bad settings before building anything."""
        job = BuildSurfaceJob(test_context, settings=Settings(seed=-1), log=mock_logger)
        with pytest.raises(DomainError, match="seed"):
            job.execute(n=4)


class TestVerifySurfaceJob:
    """Tests for VerifySurfaceJob."""

    def test_round_trip(self, test_context, mock_logger, tmp_path):
        """Test a surface written by build verifies with the same genus."""
        path = tmp_path / "t5.json"
        built = BuildSurfaceJob(test_context, log=mock_logger).execute(n=5, out=str(path))
        verified = VerifySurfaceJob(test_context, log=mock_logger).execute(surface=str(path))

        assert verified.status == ResultStatus.SUCCESS
        assert verified.genus == built.genus
        assert verified.artifacts["manifold"]["f"] == 40

    def test_open_surface_fails(self, test_context, mock_logger, tmp_path, t3):
        """Test a surface with a missing face fails closed_surface."""
        data = t3.to_dict()
        data["faces"] = data["faces"][1:]
        path = tmp_path / "open.json"
        path.write_text(json.dumps(data))

        report = VerifySurfaceJob(test_context, log=mock_logger).execute(surface=str(path))
        assert report.status == ResultStatus.FAILURE
        assert report.exit_code == 1
        assert report.certificates[0].name == "closed_surface"
        assert not report.certificates[0].passed

    def test_missing_file(self, test_context, mock_logger, tmp_path):
        """Test a missing file is invalid input."""
        with pytest.raises(DomainError):
            VerifySurfaceJob(test_context, log=mock_logger).execute(surface=str(tmp_path / "none.json"))

    def test_not_an_object(self, test_context, mock_logger, tmp_path):
        """Test a JSON list is refused."""
        path = tmp_path / "list.json"
        path.write_text("[1, 2, 3]")
        with pytest.raises(DomainError):
            VerifySurfaceJob(test_context, log=mock_logger).execute(surface=str(path))


class TestParallelFamilyJob:
    """Tests for ParallelFamilyJob."""

    def test_round_table(self, test_context, mock_logger):
        """Test the default decomposition for n=5 certifies."""
        report = ParallelFamilyJob(test_context, log=mock_logger).execute(n=5)
        assert report.status == ResultStatus.SUCCESS
        assert report.artifacts["coverage"] == {"faces_covered": 80, "member_count": 2}
        names = {c.name for c in report.certificates}
        assert {"edge_disjoint", "complete", "face_disjoint", "full_coverage",
                "pairwise_intersection_is_qn", "members_isometric"} <= names

    def test_even_n(self, test_context, mock_logger):
        """Test even n without a decomposition is refused."""
        with pytest.raises(DomainError, match="odd"):
            ParallelFamilyJob(test_context, log=mock_logger).execute(n=6)

    def test_general_decomposition(self, test_context, mock_logger, tmp_path):
        """Test a mixed decomposition is certified per component."""
        path = tmp_path / "d.json"
        path.write_text(json.dumps([[1, 2, 3], [1, 4, 5], [2, 4, 3, 5]]))
        report = ParallelFamilyJob(test_context, log=mock_logger).execute(n=5, decomposition=str(path))

        assert report.status == ResultStatus.SUCCESS
        names = [c.name for c in report.certificates]
        assert "pairwise_intersection_is_qn" not in names
        assert names.count("components_closed") == 3
        assert report.genus["T(1,2,3)"] == {"components": [0, 0, 0, 0]}

    def test_bad_decomposition_file(self, test_context, mock_logger, tmp_path):
        """Test a JSON object where a list is expected."""
        path = tmp_path / "d.json"
        path.write_text("{}")
        with pytest.raises(DomainError):
            ParallelFamilyJob(test_context, log=mock_logger).execute(n=5, decomposition=str(path))


class TestGenusTableJob:
    """Tests for GenusTableJob."""

    def test_rows(self, test_context, mock_logger):
        """Test the n=4 row and the constructed genus up to the limit."""
        report = GenusTableJob(test_context, log=mock_logger).execute(n=6)
        rows = report.artifacts["table"]
        assert [row["n"] for row in rows] == [3, 4, 5, 6]
        assert rows[1] == {
            "n": 4,
            "v": 16,
            "e": 32,
            "faces": 16,
            "formula_genus": 1,
            "constructed_genus": 1,
            "lower_bound": "1",
            "tight": True,
        }
        assert report.status == ResultStatus.SUCCESS

    def test_formula_only(self, test_context, mock_logger):
        """Test rows past the build limit are not constructed."""
        report = GenusTableJob(test_context, log=mock_logger).execute(n=12, build_limit=5)
        rows = report.artifacts["table"]
        assert rows[-1]["constructed_genus"] == FORMULA_ONLY
        assert rows[-1]["formula_genus"] == 1 + 8 * 2 ** 9
        assert all(row["tight"] for row in rows)
        subjects = [c.subject for c in report.certificates if c.name == "genus_matches_formula"]
        assert subjects == ["n=3", "n=4", "n=5"]

    def test_empty_below_three(self, test_context, mock_logger):
        """Test n_max below 3 gives an empty table, not an error."""
        report = GenusTableJob(test_context, log=mock_logger).execute(n=2)
        assert report.artifacts["table"] == []
        assert report.certificates == []
        assert report.status == ResultStatus.SUCCESS

    def test_out_of_range(self, test_context, mock_logger):
        """Test n above the dimension cap is refused."""
        with pytest.raises(DomainError):
            GenusTableJob(test_context, log=mock_logger).execute(n=40)

    def test_zero_build_limit(self, test_context, mock_logger):
        """Test an explicit build limit of 0 is refused rather than defaulted."""
        with pytest.raises(DomainError, match="build limit"):
            GenusTableJob(test_context, log=mock_logger).execute(n=5, build_limit=0)


class TestExportMeshJob:
    """Tests for ExportMeshJob."""

    def test_off_in_report(self, test_context, mock_logger):
        """Test the OFF text lands in the artifacts."""
        report = ExportMeshJob(test_context, log=mock_logger).execute(n=4, seed=7)
        assert report.status == ResultStatus.SUCCESS
        assert report.artifacts["off"].startswith("OFF\n16 16 0\n")
        assert report.artifacts["mesh"]["seed"] == 7

    def test_deterministic(self, test_context, mock_logger):
        """Test identical runs produce identical OFF text."""
        first = ExportMeshJob(test_context, log=mock_logger).execute(n=5, seed=1)
        second = ExportMeshJob(test_context, log=mock_logger).execute(n=5, seed=1)
        assert first.artifacts["off"] == second.artifacts["off"]

    def test_write_out(self, test_context, mock_logger, tmp_path):
        """Test --out writes the file."""
        path = tmp_path / "q3.off"
        report = ExportMeshJob(test_context, log=mock_logger).execute(n=3, out=str(path), projection="axis")
        assert report.artifacts["mesh_file"] == str(path)
        assert path.read_text().splitlines()[1] == "8 6 0"

    def test_refuses_uncertified(self, test_context, mock_logger, mocker):
        """Test a failing certificate stops the export."""
        mocker.patch(
            "core.operations.certification.qn_genus",
            return_value=-1,
        )
        report = ExportMeshJob(test_context, log=mock_logger).execute(n=4)
        assert report.status == ResultStatus.FAILURE
        assert "off" not in report.artifacts
        assert any("Refusing" in e for e in report.errors)


class TestMobiusSearchJob:
    """Tests for MobiusSearchJob."""

    def test_found_in_h4(self, test_context, mock_logger):
        """Test a verified strip is reported for n=4."""
        report = MobiusSearchJob(test_context, log=mock_logger).execute(n=4)
        assert report.status == ResultStatus.SUCCESS
        assert report.artifacts["witness"]["reversals"] % 2 == 1

    def test_none_in_h3(self, test_context, mock_logger):
        """Test no strip in H_3 is the expected outcome."""
        report = MobiusSearchJob(test_context, log=mock_logger).execute(n=3)
        assert report.status == ResultStatus.SUCCESS
        assert report.artifacts["witness"] is None

    def test_zero_max_length(self, test_context, mock_logger):
        """Test max_length=0 is refused rather than replaced by the default."""
        with pytest.raises(DomainError, match="max_length"):
            MobiusSearchJob(test_context, log=mock_logger).execute(n=4, max_length=0)


class TestDumpsJson:
    """Tests for dumps_json."""

    def test_sorted_keys(self):
        """Test keys are sorted and the text ends with a newline."""
        assert dumps_json({"b": 1, "a": 2}) == '{\n  "a": 2,\n  "b": 1\n}\n'
