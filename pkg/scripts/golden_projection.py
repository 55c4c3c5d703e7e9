"""Project the 3x6 worked example onto index 2 and print everything exactly.

    python scripts/golden_projection.py
"""
from crossdim import class_inner, class_of, norm_sq, project
from crossdim.matrixio import format_matrix
from crossdim.suites import EXAMPLE_A, EXAMPLE_PROJECTION, EXAMPLE_RESIDUAL


def main():
    r = project(EXAMPLE_A, 2)
    print("A =")
    print(format_matrix(EXAMPLE_A))
    print(f"\nt = {r.lift_index}, blocks {r.block_size}x{r.block_size}")
    print("\nprojection root =")
    print(format_matrix(r.projection.root))
    print("\nresidual E at the common lift =")
    print(format_matrix(r.residual_lift))
    e = class_of(r.residual_lift)
    print(f"\nmatches reference projection: {r.projection.root == EXAMPLE_PROJECTION}")
    print(f"matches reference residual:   {r.residual_lift == EXAMPLE_RESIDUAL}")
    print(f"(P | E) = {class_inner(r.projection, e)}")
    print(f"(E | A) = {class_inner(e, EXAMPLE_A)}   (equals |E|^2 = {norm_sq(e)}, so E is not orthogonal to A)")
    print(f"|A|^2 = {norm_sq(EXAMPLE_A)} = |P|^2 + |E|^2 = {norm_sq(r.projection)} + {norm_sq(e)}")


if __name__ == "__main__":
    main()
