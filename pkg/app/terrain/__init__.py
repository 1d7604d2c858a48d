from app.terrain.surfaces import (
    Surface,
    SinusoidalParams,
    make_sinusoidal,
    make_plane,
    build_surface,
    check_gradient,
    gradient_grid_error,
)

__all__ = [
    'Surface',
    'SinusoidalParams',
    'make_sinusoidal',
    'make_plane',
    'build_surface',
    'check_gradient',
    'gradient_grid_error',
]
