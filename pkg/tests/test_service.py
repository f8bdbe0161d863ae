"""HTTP endpoint tests using the in-process test client."""

import pytest
from fastapi.testclient import TestClient

from zfam import __version__
from zfam.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def xor_table(rank):
    n = 1 << rank
    return [[a ^ b for b in range(n)] for a in range(n)]


class TestHealth:
    def test_health(self, client):
        reply = client.get("/v1/health")
        assert reply.status_code == 200
        body = reply.json()
        assert body["schema"] == 1
        assert body["status"] == "ok"
        assert body["version"] == __version__


class TestEnumerate:
    def test_ordered_count(self, client):
        reply = client.post("/v1/enumerate", json={"group": "Z2^2", "tau": "2^4"})
        assert reply.status_code == 200
        body = reply.json()
        assert body["schema"] == 1
        assert body["count"] == 18
        assert body["complete"] is True
        assert body["truncated"] is False
        assert len(body["systems"]) == 18

    def test_multiset_count(self, client):
        reply = client.post(
            "/v1/enumerate", json={"group": "Z2^2", "tau": "2^4", "mode": "multiset"}
        )
        body = reply.json()
        assert body["count"] == 3
        assert sorted(body["systems"]) == [[1, 1, 2, 2], [1, 1, 3, 3], [2, 2, 3, 3]]

    def test_truncation_keeps_total_count(self, client):
        reply = client.post(
            "/v1/enumerate", json={"group": "Z2^2", "tau": "2^4", "max_systems": 5}
        )
        body = reply.json()
        assert body["count"] == 18
        assert body["truncated"] is True
        assert len(body["systems"]) == 5

    def test_budget_exhaustion_is_a_flagged_200(self, client):
        reply = client.post(
            "/v1/enumerate", json={"group": "Z2^3", "tau": "2^6", "budget": 10}
        )
        assert reply.status_code == 200
        body = reply.json()
        assert body["complete"] is False
        assert "budget" in body["detail"]

    def test_inline_table_matches_token(self, client):
        token = client.post("/v1/enumerate", json={"group": "Z2^2", "tau": "2^4"}).json()
        table = client.post(
            "/v1/enumerate", json={"group": xor_table(2), "tau": "2^4"}
        ).json()
        assert table["count"] == token["count"]
        assert sorted(table["systems"]) == sorted(token["systems"])
        assert table["group"] == "table<4>"

    def test_bad_type_is_400(self, client):
        reply = client.post("/v1/enumerate", json={"group": "Z2^2", "tau": "1^4"})
        assert reply.status_code == 400
        assert "error" in reply.json()

    def test_bad_group_token_is_400(self, client):
        reply = client.post("/v1/enumerate", json={"group": "S3", "tau": "2^4"})
        assert reply.status_code == 400
        assert "Z2^k" in reply.json()["error"]

    def test_unknown_field_is_422(self, client):
        reply = client.post(
            "/v1/enumerate", json={"group": "Z2^2", "tau": "2^4", "bogus": 1}
        )
        assert reply.status_code == 422


class TestComponents:
    def test_equal_types(self, client):
        reply = client.post(
            "/v1/components", json={"group": "Z2^3", "tau1": "2^6", "tau2": "2^6"}
        )
        assert reply.status_code == 200
        body = reply.json()
        assert body["h"] == 1
        assert body["completeness"] == "exact"
        assert body["convention"] == {
            "swap_identified": True,
            "inner_identified": False,
            "count_ordered_pairs": False,
        }
        assert body["keys"] is None

    def test_distinct_types_and_keys(self, client):
        reply = client.post(
            "/v1/components",
            json={"group": "Z2^3", "tau1": "2^8", "tau2": "2^6", "include_keys": True},
        )
        body = reply.json()
        # request order does not matter; the echoed pair is sorted
        assert (body["tau1"], body["tau2"]) == ("2^6", "2^8")
        assert body["h"] == 3
        assert body["convention"]["swap_identified"] is False
        assert len(body["keys"]) == 3
        assert all(isinstance(k, str) for k in body["keys"])

    def test_ordered_convention(self, client):
        reply = client.post(
            "/v1/components",
            json={
                "group": "Z2^3",
                "tau1": "2^12",
                "tau2": "2^12",
                "count_ordered_pairs": True,
            },
        )
        body = reply.json()
        assert body["h"] == 94
        assert body["convention"]["swap_identified"] is False
        assert body["convention"]["count_ordered_pairs"] is True

    def test_budget_limited_payload(self, client):
        reply = client.post(
            "/v1/components",
            json={"group": "Z2^4", "tau1": "2^12", "tau2": "2^12", "budget": 1000},
        )
        assert reply.status_code == 200
        body = reply.json()
        assert body["h"] is None
        assert body["completeness"] == "budget-limited"
        assert "budget" in body["detail"]

    def test_workers_cap_is_422(self, client):
        reply = client.post(
            "/v1/components",
            json={"group": "Z2^3", "tau1": "2^6", "tau2": "2^6", "workers": 100},
        )
        assert reply.status_code == 422


class TestInvariants:
    def test_worked_row(self, client):
        reply = client.post("/v1/invariants", json={"ksq": 8, "c2": 4})
        body = reply.json()
        assert body["nu"] == 32
        assert body["d"] == 112
        assert body["n"] == 5340
        assert body["c"] == 540
        assert body["g"] == 225
        assert body["chisini"]["threshold"] == "112/29"
        assert body["chisini"]["ok"] is True
        assert body["main_theorem"] == {"n_d": 5340, "c_d": 540}

    def test_degree_off_lattice_has_no_theorem_block(self, client):
        reply = client.post("/v1/invariants", json={"ksq": 3, "c2": 12, "m": 3})
        body = reply.json()
        assert body["d"] == 90
        assert body["main_theorem"] is None

    def test_inconsistent_input_is_400(self, client):
        # c2 large enough to push the cusp count negative
        reply = client.post("/v1/invariants", json={"ksq": 1, "c2": 1000})
        assert reply.status_code == 400


class TestFamily:
    def test_member_3_7(self, client):
        reply = client.post("/v1/family", json={"k": 3, "l": 7})
        assert reply.status_code == 200
        body = reply.json()
        assert body["schema"] == 1
        row = body["report"]
        assert row["h"] == 2130
        assert row["completeness"] == "exact"
        assert row["params"]["epsilon"] == "1/3"
        assert row["invariants"]["ksq"] == 1024
        assert row["curve"]["d"] == 14336
        assert row["bounds"]["log2_lower_eq15"] == 8
        assert row["chisini"]["threshold"] == "112/29"
        assert row["witness_status"] == "found"
        assert row["assumptions"] == ["very-ampleness of the bicanonical system assumed"]

    def test_epsilon_override(self, client):
        base = client.post("/v1/family", json={"k": 3, "l": 7}).json()["report"]
        over = client.post("/v1/family", json={"k": 3, "l": 7, "epsilon": "1"}).json()["report"]
        assert over["params"]["epsilon"] == "1/3"
        assert over["bounds"]["log2_lower_eq15"] != base["bounds"]["log2_lower_eq15"]

    def test_constraint_violation_is_400(self, client):
        reply = client.post("/v1/family", json={"k": 3, "l": 6})
        assert reply.status_code == 400
        assert "2k" in reply.json()["error"]

    def test_k_cap_is_422(self, client):
        reply = client.post("/v1/family", json={"k": 17, "l": 40})
        assert reply.status_code == 422

    def test_bad_epsilon_is_400(self, client):
        reply = client.post("/v1/family", json={"k": 3, "l": 7, "epsilon": "zero"})
        assert reply.status_code == 400


class TestReport:
    def test_rectangle_skips_invalid_members(self, client):
        reply = client.post(
            "/v1/report",
            json={"k_min": 2, "k_max": 3, "l_min": 5, "l_max": 7, "budget": 200000},
        )
        assert reply.status_code == 200
        body = reply.json()
        pairs = [(row["k"], row["l"]) for row in body["reports"]]
        assert pairs == [(2, 5), (2, 6), (2, 7), (3, 7)]

    def test_empty_rectangle(self, client):
        reply = client.post(
            "/v1/report", json={"k_min": 4, "k_max": 4, "l_min": 5, "l_max": 8}
        )
        assert reply.json()["reports"] == []

    def test_reversed_range_is_400(self, client):
        reply = client.post(
            "/v1/report", json={"k_min": 3, "k_max": 2, "l_min": 5, "l_max": 7}
        )
        assert reply.status_code == 400
