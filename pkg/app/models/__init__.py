# app/models/__init__.py
"""
Value types shared by the simulation packages
"""
from app.models.enums import PathName, PathVariant, RobotClass, SurfaceKind
from app.models.robot import ActuationRates, RobotState
from app.models.trajectory import CSV_COLUMNS, TrajectoryRecord, TrajectoryRow, read_csv
