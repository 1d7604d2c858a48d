from app.control.paths import DesiredPath
from app.control.pursuit import (
    E_EPSILON,
    Gains,
    TrackingSnapshot,
    tracking_error,
    deviation_angle,
    snapshot,
    error_gain,
    control_3r,
    control_2r,
    control_rt,
    control_rs,
    compute_rates,
)
