#!/usr/bin/env python3
"""
Tutte sign demo script
Walks through region classification, sign algorithms, gadgets and the
cut-counting reduction on small graphs
"""
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from src.arith.rational import format_rational
from src.gadgets.constructions import ConstructionEngine
from src.graphs.families import complete_graph, cycle_graph, petersen_graph
from src.reduction.mincut import count_min_cuts_brute
from src.reduction.sign_reduction import SignReduction
from src.regions.classifier import classify, scan_grid
from src.regions.point import PlanePoint
from src.signs.dispatch import SignDispatcher
from src.tutte.specializations import chromatic_poly, flow_poly


def print_header(title: str):
    """Print formatted header"""
    print("\n" + "=" * 60)
    print(f"  {title}")
    print("=" * 60)


def print_separator():
    """Print separator line"""
    print("-" * 60)


def demo_region_map():
    """Coarse text map of the plane, one character per region"""
    print_header("DEMO: Complexity map on [-3, 3] x [-3, 3]")
    rows = scan_grid((-3, 3), (-3, 3), Fraction(1, 2))
    symbols = {"FP": ".", "NP-complete": "N", "SharpP-hard": "#", "Open": "?"}
    by_point = {(p.x, p.y): pc for p, pc in rows}
    ys = sorted({p.y for p, _ in rows}, reverse=True)
    xs = sorted({p.x for p, _ in rows})
    for y in ys:
        line = "".join(symbols[by_point[(x, y)].status.value] for x in xs)
        print(f"  y={format_rational(y):>5} {line}")
    print("  legend: . FP   N NP-complete   # #P-hard   ? open")


def demo_signs():
    """Sign reports on the Petersen graph"""
    print_header("DEMO: Signs on the Petersen graph")
    dispatcher = SignDispatcher()
    graph = petersen_graph()
    for x, y in [(2, 3), (-1, -1), (-2, 0), (0, -2), (Fraction(1, 2), Fraction(1, 2))]:
        point = PlanePoint(x, y)
        report = dispatcher.dispatch(graph, point)
        print(f"📍 {point}: {report.sign.label} via {report.method}"
              f" [{classify(point).region.value}]")
        if report.certificate:
            print(f"   🧾 {report.certificate}")
    print_separator()
    print(f"🎨 P(K4; q) = {chromatic_poly(complete_graph(4)).pretty()}")
    print(f"🌊 F(Petersen; q) = {flow_poly(graph).pretty()}")


def demo_gadgets():
    """A few constructions with their certified end points"""
    print_header("DEMO: Gadget constructions")
    engine = ConstructionEngine()
    for name, (x, y) in [("two-stretch-lift", (Fraction(-3, 2), Fraction(-1, 2))),
                         ("even-stretch-cd", (2, -3)),
                         ("region-e-q-1-2", (-2, Fraction(1, 2)))]:
        start = PlanePoint(x, y)
        try:
            built = engine.construct(start, name)
        except ValueError as e:
            print(f"❌ {name} at {start}: {e}")
            continue
        for point, gadget in built:
            print(f"🔧 {name}: {start} -> {point}  ({gadget.edge_count} edges)")


def demo_reduction():
    """Count minimum cuts of C4 from sign queries"""
    print_header("DEMO: Minimum cuts from sign queries")
    graph = cycle_graph(4)
    truth = count_min_cuts_brute(graph, 0, 2)
    for q in (Fraction(3, 2), Fraction(1, 2), Fraction(-1)):
        report = SignReduction().run(graph, 0, 2, q)
        status = "✅" if report.count == truth else "❌"
        print(f"{status} q={format_rational(q)}: k={report.count.k}, C={report.count.C} "
              f"after {report.queries} queries (brute force: k={truth.k}, C={truth.C})")


def main():
    print("🚀 Tutte sign toolkit demo")
    try:
        demo_region_map()
        demo_signs()
        demo_gadgets()
        demo_reduction()
    except ImportError as e:
        print(f"❌ Import error: {e}")
        print("💡 Make sure you've installed the requirements:")
        print("   pip install -r requirements.txt")
        return 1
    print("\n🎉 Demo complete")
    return 0


if __name__ == "__main__":
    sys.exit(main())
