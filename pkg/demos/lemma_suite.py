"""Run the six estimate and identity checks and print their reports."""

from ballharm import (
    check_lemma1,
    check_lemma2,
    check_lemma3,
    check_lemma4,
    check_lemma5,
    check_lemma6,
)


def show(rep):
    status = "PASS" if rep.passed else "FAIL"
    print(f"lemma {rep.lemma_id}: {status}  [{rep.parameter_grid}]")
    for key, val in rep.measured.items():
        if isinstance(val, float):
            print(f"    {key} = {val:.6g}")
    print()


show(check_lemma1(2, 1.0))          # pointwise kernel bound + integrated growth
show(check_lemma2(0.5, 2.0))        # weighted radial integral decay rate
show(check_lemma3(3))               # reproducing boundary pairing
show(check_lemma4(3, 2))            # radial moment identity
show(check_lemma5(p=2.0, q=0.5))    # mean-growth inequality under concave powers
show(check_lemma6(3, m=2))          # weighted ball pairing identity
