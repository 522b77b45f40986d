use nalgebra::Vector3;

use quantum_core::ode::{integrate_real3, OdeOpts};
use quantum_core::CoreError;

use crate::generator::tcl_generator;
use crate::model::{DephasingModel, Frame, KernelMode, TclOrder};

/// Propagate the Bloch vector under the closed-form time-local generator.
pub fn propagate(
    model: &DephasingModel,
    order: TclOrder,
    frame: Frame,
    mode: KernelMode,
    r0: &Vector3<f64>,
    t_grid: &[f64],
    opts: &OdeOpts,
) -> Result<Vec<Vector3<f64>>, CoreError> {
    integrate_real3(
        &mut |t, r: &Vector3<f64>| tcl_generator(model, order, frame, mode, t).apply(r),
        *r0,
        t_grid,
        opts,
    )
}
