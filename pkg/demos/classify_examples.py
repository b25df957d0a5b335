"""Classify a handful of small networks and print their capacities."""

from crnms import classify, parse_network

NETWORKS = {
    "autocatalysis with decay": "0 <-> A\n2A -> 3A",
    "Ho-Harrington pair": "B -> A\nA + 2B -> 3B",
    "two-species, unique steady state": "A + 2B -> 3B\n3A + B -> 4A",
    "bistable switch": "A <-> B\n2A + B -> 3A",
    "deficiency zero": "A + B -> 3A + C",
}

for title, text in NETWORKS.items():
    v = classify(parse_network(text))
    print(f"{title}: {text.replace(chr(10), '; ')}")
    print(f"  case {v.case_label.value}, pss {v.cap_pss}, npss {v.cap_npss}, stable {v.cap_stable}")
    print(f"  multistationary={v.multistationary} multistable={v.multistable}")
