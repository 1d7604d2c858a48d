from app.robots.kinematics import (
    validate_rates,
    body_velocity,
    world_velocity,
    heading_rate,
    effective_psi,
    center_point,
    rs_angular_velocity,
)
