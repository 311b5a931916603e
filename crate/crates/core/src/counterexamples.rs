//! Hand-picked hexahedra that defeat the cheap validity screens.

use crate::geometry::HexNodes;

/// Invalid, although its Jacobian determinant is positive at all 27 nodes of
/// the second-order hexahedron and every corner tetrahedron is positive.
pub fn invalid_positive_at_27_nodes() -> HexNodes {
    hex([
        [0.0, 0.0, 0.0],
        [1.0, 0.0, 0.0],
        [1.7615170641459, 0.594764272968121, 0.15552188663289],
        [0.438888411629833, 1.53098020041072, 0.185631029838277],
        [1.3859049651391, 0.0755794018509022, 1.77483024073906],
        [1.22129676447071, 0.271876165350328, 0.630922158503566],
        [1.77365642274365, 1.25103990471942, 1.83300604452892],
        [0.0769922201302364, 0.940424880836765, 1.45521546591891],
    ])
}

/// Valid, but rejected by the 24-tetrahedra sufficient test.
pub fn valid_rejected_by_tet_tests() -> HexNodes {
    hex([
        [0.0, 0.0, 0.0],
        [1.0, 0.0, 0.0],
        [1.539, 0.704696, 1.84011],
        [0.166589, 1.08208, 0.162539],
        [0.0501127, 1.96347, 1.56559],
        [0.422336, 0.00419138, 1.43038],
        [0.509917, 0.0214216, 1.55322],
        [0.40783, 1.73452, 1.93234],
    ])
}

/// Invalid, with a minimum corner scaled Jacobian of about 0.64.
pub fn invalid_good_corner_quality() -> HexNodes {
    hex([
        [0.464949491866817, 0.358989226966155, 0.0133365886410108],
        [0.481795709097567, 0.358745078890347, 0.0163884395886105],
        [0.482406079287087, 0.351664784691916, 0.0235297708059938],
        [0.466719565416425, 0.339945677053133, 0.0278023621326335],
        [0.465498825037385, 0.320291756950591, -0.00277718436231578],
        [0.465987121189001, 0.321085238196966, -0.0042420728171636],
        [0.501998962370677, 0.322367015594958, -0.0116275521103549],
        [0.487166966765343, 0.308816797387616, 0.0115054780724508],
    ])
}

fn hex(c: [[f64; 3]; 8]) -> HexNodes {
    HexNodes::from_coords(c).expect("finite literal coordinates")
}
