#!/usr/bin/env python3
"""
Setup verification script
"""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def verify_setup():
    """Verify the project layout, configuration and a few known values"""
    print("🔍 Verifying Tutte sign toolkit setup...\n")

    required_dirs = [
        "config",
        "data/graphs",
        "src/arith",
        "src/graphs",
        "src/tutte",
        "src/matroids",
        "src/regions",
        "src/signs",
        "src/gadgets",
        "src/reduction",
        "src/interfaces",
        "tests/unit",
        "tests/integration",
    ]

    print("📁 Checking project structure:")
    for dir_path in required_dirs:
        status = "✅" if Path(dir_path).exists() else "❌"
        print(f"  {status} {dir_path}")

    required_files = [
        "requirements.txt",
        "README.md",
        ".env.example",
        "config/settings.py",
        "src/__init__.py",
        "tutte_sign.py",
    ]

    print("\n📄 Checking required files:")
    for file_path in required_files:
        status = "✅" if Path(file_path).exists() else "❌"
        print(f"  {status} {file_path}")

    print("\n⚙️  Testing configuration:")
    try:
        from config.settings import get_config
        config = get_config()
        print("  ✅ Configuration loaded successfully")
        print(f"  ✅ Brute-force cap: {config.evaluation.brute_force_cap}")
        print(f"  ✅ Reduction: {config.reduction.mode} / {config.reduction.schedule}")
    except Exception as e:
        print(f"  ❌ Configuration error: {e}")
        return False

    print("\n🧮 Checking known values:")
    try:
        from fractions import Fraction
        from src.graphs.families import petersen_graph
        from src.regions.classifier import classify
        from src.regions.point import PlanePoint
        from src.tutte.evaluator import tutte_value
        from src.tutte.specializations import flow_poly

        petersen = petersen_graph()
        checks = [
            ("T(Petersen; 2, 2) = 2^15", tutte_value(petersen, 2, 2) == 2 ** 15),
            ("F(Petersen; 4) = 0", flow_poly(petersen)(4) == 0),
            ("(-1/2, -3/2) is #P-hard", classify(PlanePoint(Fraction(-1, 2), Fraction(-3, 2))).status.value
             == "SharpP-hard"),
        ]
        for label, ok in checks:
            print(f"  {'✅' if ok else '❌'} {label}")
        if not all(ok for _, ok in checks):
            return False
    except ImportError as e:
        print(f"  ❌ Import error: {e}")
        print("  💡 Install the requirements: pip install -r requirements.txt")
        return False

    print("\n🎉 Setup complete!")
    print("\n📋 Next steps:")
    print("  1. python tutte_sign.py classify --x -1/2 --y -3/2")
    print("  2. python tutte_sign.py eval --graph data/graphs/petersen.txt --x 2 --y 2")
    print("  3. python tutte_sign.py mincut --graph data/graphs/c4.txt --q 3/2")
    print("  4. pytest")
    return True


if __name__ == "__main__":
    success = verify_setup()
    sys.exit(0 if success else 1)
