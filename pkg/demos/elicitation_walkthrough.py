"""A decision maker entering judgments one at a time against the live service.

Drives the HTTP API in-process (no network socket) through the same
endpoints the web console uses: create a session, watch the report stay
unavailable until the comparison graph connects, enter the nine tennis
ratios, then deliberately distort one judgment and let the per-comparison
decomposition point back at it. Needs the ``test`` extra for httpx.
"""

from fastapi.testclient import TestClient

from pcmentropy.service import create_app

COMPARISONS = [
    ("A", "B", 1.39), ("A", "F", 0.76), ("A", "N", 0.9), ("A", "S", 0.73),
    ("B", "S", 0.77), ("D", "F", 0.95), ("D", "N", 0.77), ("F", "N", 0.52),
    ("F", "S", 1.05),
]


def main():
    client = TestClient(create_app())
    sid = client.post("/sessions", json={"labels": ["A", "B", "D", "F", "N", "S"]}).json()["id"]
    print(f"session {sid} created; report before any entries:")
    resp = client.get(f"/sessions/{sid}/report")
    print(f"  {resp.status_code}: {resp.json()['message']}")
    print()

    for i, (a, b, value) in enumerate(COMPARISONS, start=1):
        body = client.put(f"/sessions/{sid}/entries", json={"a": a, "b": b, "value": value}).json()
        if body["connected"]:
            print(f"entry {i}: {a}/{b} = {value:<5} sdot = {body['report']['sdot']:.4f}")
        else:
            parts = len(body["components"])
            print(f"entry {i}: {a}/{b} = {value:<5} graph still in {parts} pieces")
    print()

    report = client.get(f"/sessions/{sid}/report").json()
    labels = client.get(f"/sessions/{sid}").json()["labels"]
    ranked = sorted(zip(labels, report["scale"]), key=lambda x: -x[1])
    print("ranking:", ", ".join(f"{lab} {val:.3f}" for lab, val in ranked))
    print()

    # fresh session with self-consistent judgments, then one slip of the pen
    sid2 = client.post("/sessions", json={"labels": ["w", "x", "y", "z"]}).json()["id"]
    scale = {"w": 1.0, "x": 2.0, "y": 4.0, "z": 8.0}
    names = list(scale)
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            client.put(f"/sessions/{sid2}/entries", json={"a": a, "b": b, "value": scale[a] / scale[b]})
    body = client.get(f"/sessions/{sid2}/report").json()
    print(f"second session, consistent entries: sdot = {body['sdot']:.2e}, "
          f"nothing to revisit: {body['topComparisons']}")

    print("mistyping w/z as 0.375 (three times its consistent value) ...")
    client.put(f"/sessions/{sid2}/entries", json={"a": "w", "b": "z", "value": 3.0 / 8.0})
    body = client.get(f"/sessions/{sid2}/report", params={"k": 3}).json()
    print(f"sdot jumped to {body['sdot']:.4f}; comparisons to revisit:")
    for card in body["topComparisons"]:
        print(f"  {names[card['a']]} vs {names[card['b']]}: {card['value']:.4f}")


if __name__ == "__main__":
    main()
