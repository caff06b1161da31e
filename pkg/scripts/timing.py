"""Wall-clock every named check, as run by `koszulkit check-paper`."""

from koszulkit import recipes


def main():
    total = 0.0
    for r in recipes.run_all(stop_on_failure=False):
        total += r.seconds
        print(f"{r.name:<20} {'ok' if r.passed else 'FAIL':<5} {r.seconds:8.2f}s")
    print(f"{'total':<26} {total:8.2f}s")


if __name__ == "__main__":
    main()
