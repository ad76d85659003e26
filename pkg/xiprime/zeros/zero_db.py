"""SQLite-backed cache of zero scans (zeros.db)."""

from __future__ import annotations

from pathlib import Path

import numpy as np
from loguru import logger
from sqlalchemy import Float, Integer, LargeBinary, String, UniqueConstraint, create_engine, select
from sqlalchemy.orm import DeclarativeBase, Mapped, mapped_column, sessionmaker

from .models import ZeroKind, ZeroSet
from .scan import GridPolicy


class _Base(DeclarativeBase):
    pass


class ZeroScanORM(_Base):
    __tablename__ = "zero_scans"
    __table_args__ = (UniqueConstraint("kind", "t_lo", "t_hi", "tolerance", "grid_c", "crossover"),)

    id: Mapped[int] = mapped_column(Integer, primary_key=True, autoincrement=True)
    kind: Mapped[str] = mapped_column(String, nullable=False)
    t_lo: Mapped[float] = mapped_column(Float, nullable=False)
    t_hi: Mapped[float] = mapped_column(Float, nullable=False)
    tolerance: Mapped[float] = mapped_column(Float, nullable=False)
    grid_c: Mapped[float] = mapped_column(Float, nullable=False)
    crossover: Mapped[float] = mapped_column(Float, nullable=False)
    source: Mapped[str] = mapped_column(String, default="")
    count: Mapped[int] = mapped_column(Integer, default=0)
    ordinates: Mapped[bytes] = mapped_column(LargeBinary, nullable=False)


class ZeroDB:
    """Thin SQLite wrapper keyed by (kind, range, tolerance, grid)."""

    def __init__(self, db_path: str | Path = "zeros.db"):
        db_path = Path(db_path)
        db_path.parent.mkdir(parents=True, exist_ok=True)
        self.engine = create_engine(f"sqlite:///{db_path}", connect_args={"timeout": 5})
        with self.engine.begin() as conn:
            conn.exec_driver_sql("PRAGMA journal_mode=WAL;")
        _Base.metadata.create_all(self.engine)
        self.Session = sessionmaker(bind=self.engine, expire_on_commit=False)
        logger.info("Zero DB initialised at {}", db_path)

    @staticmethod
    def _key(kind: ZeroKind, t_lo: float, t_hi: float, policy: GridPolicy):
        return (
            (ZeroScanORM.kind == kind.value)
            & (ZeroScanORM.t_lo == float(t_lo))
            & (ZeroScanORM.t_hi == float(t_hi))
            & (ZeroScanORM.tolerance == float(policy.tolerance))
            & (ZeroScanORM.grid_c == float(policy.grid_c))
            & (ZeroScanORM.crossover == float(policy.crossover))
        )

    # ---- read ----

    def get(self, kind: ZeroKind, t_lo: float, t_hi: float, policy: GridPolicy) -> ZeroSet | None:
        with self.Session() as session:
            row = session.scalars(select(ZeroScanORM).where(self._key(kind, t_lo, t_hi, policy))).first()
        if row is None:
            return None
        logger.info("Zero cache hit: {} on [{}, {}]", kind.value, t_lo, t_hi)
        return ZeroSet(
            kind=ZeroKind(row.kind),
            ordinates=np.frombuffer(row.ordinates, dtype="<f8").copy(),
            t_max=row.t_hi,
            ordinate_tolerance=row.tolerance,
            source=row.source,
            t_min=row.t_lo,
        )

    def list_scans(self) -> list[dict]:
        with self.Session() as session:
            rows = session.scalars(select(ZeroScanORM).order_by(ZeroScanORM.id)).all()
        return [
            {"id": r.id, "kind": r.kind, "t_lo": r.t_lo, "t_hi": r.t_hi, "count": r.count, "source": r.source}
            for r in rows
        ]

    # ---- write ----

    def save(self, zs: ZeroSet, policy: GridPolicy) -> None:
        t_lo, t_hi = zs.t_min, zs.t_max
        blob = np.ascontiguousarray(zs.ordinates, dtype="<f8").tobytes()
        with self.Session() as session:
            row = session.scalars(select(ZeroScanORM).where(self._key(zs.kind, t_lo, t_hi, policy))).first()
            if row is None:
                row = ZeroScanORM(
                    kind=zs.kind.value,
                    t_lo=float(t_lo),
                    t_hi=float(t_hi),
                    tolerance=float(policy.tolerance),
                    grid_c=float(policy.grid_c),
                    crossover=float(policy.crossover),
                )
                session.add(row)
            row.source = zs.source
            row.count = len(zs)
            row.ordinates = blob
            session.commit()

    def delete(self, kind: ZeroKind, t_lo: float, t_hi: float, policy: GridPolicy) -> bool:
        with self.Session() as session:
            row = session.scalars(select(ZeroScanORM).where(self._key(kind, t_lo, t_hi, policy))).first()
            if row is None:
                return False
            session.delete(row)
            session.commit()
            return True

    def close(self) -> None:
        self.engine.dispose()
