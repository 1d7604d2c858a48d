from app.frames.contact import (
    SurfaceSample,
    EulerRotation,
    TransformLW,
    sample_surface,
    sample_from_slopes,
    euler_rotation,
    rotation_rodrigues,
    rotation_axis_angle,
    quaternion,
    rotation_quaternion,
    tangent_axes,
    transform_lw,
    velocity_to_world,
    frames_report,
)
