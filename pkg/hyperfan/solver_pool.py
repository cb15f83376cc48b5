from __future__ import annotations
import logging
from concurrent.futures import Executor, ProcessPoolExecutor
from typing import TYPE_CHECKING, Any, Optional, TypeVar

from pydantic import BaseModel, ValidationError
from typing_extensions import Self

from hyperfan.config import cache_config

from . import exceptions
from .models.hypergraph import UniformHypergraph
from .models.spectral import PerronResult, SolverConfig
from .spectral import spectral_radius

if TYPE_CHECKING:
    from collections.abc import Sequence
    from types import TracebackType

    from .caching.base import BaseCache

logger = logging.getLogger("hyperfan")

ModelT = TypeVar("ModelT", bound=BaseModel)


def solve_payload(payload: dict[str, Any]) -> dict[str, Any]:
    """Solve one job payload; runs inside worker processes.

    Args:
        payload (dict[str, Any]): ``{"n", "r", "edges", "config"}``.

    Returns:
        dict[str, Any]: ``{"code": 0, "result": {...}}`` on success, or an error
        payload ``{"code", "msg", "details"}``.

    """
    try:
        hypergraph = UniformHypergraph.model_validate(
            {"n": payload["n"], "r": payload["r"], "edges": payload["edges"]},
        )
        cfg = SolverConfig.model_validate(payload["config"])
        result = spectral_radius(hypergraph, cfg)
    except exceptions.HyperfanError as e:
        return {"code": e.code, "msg": e.message, "details": e.details}
    except ValidationError as e:
        return {
            "code": exceptions.InvalidHypergraphError.CODE,
            "msg": "; ".join(str(err["msg"]) for err in e.errors()),
            "details": {},
        }
    return {"code": 0, "result": result.model_dump(mode="json", by_alias=True)}


class SolverPool:
    """Front end that runs spectral solves serially or on a process pool.

    Results can be cached through the configured cache backend. Submitted jobs
    come back in submission order, whatever order the workers finish in.
    """

    def __init__(
        self,
        config: Optional[SolverConfig] = None,
        workers: int = 1,
        cache: Optional[BaseCache] = None,
        default_cache_ttl: Optional[int] = None,
    ) -> None:
        """Initialize the solver pool.

        Args:
            config (Optional[SolverConfig]): Solver settings. Defaults to ``SolverConfig()``.
            workers (int): Worker processes; 1 runs in-process. Defaults to 1.
            cache (Optional[BaseCache]): The cache instance to use. If not provided, the global cache is used.
            default_cache_ttl (Optional[int]): TTL for cached results in seconds. Defaults to no expiry.

        Returns:
            None

        """
        if workers < 1:
            msg = f"workers must be at least 1, got {workers}"
            raise exceptions.InvalidParameterError(msg, {"workers": workers})
        self.config = config or SolverConfig()
        self.workers = workers
        self.cache = cache if cache is not None else cache_config.get_cache()
        self.default_cache_ttl = default_cache_ttl
        self._executor: Executor | None = None

    def connect(self) -> None:
        """Start the worker processes (no-op for a single worker).

        Returns:
            None

        """
        if self.workers > 1 and self._executor is None:
            logger.debug(f"Starting process pool with {self.workers} workers.")
            self._executor = ProcessPoolExecutor(max_workers=self.workers)

    def close(self) -> None:
        """Shut the worker processes down.

        Returns
        -------
            None

        """
        if self._executor:
            logger.debug("Shutting process pool down.")
            self._executor.shutdown(wait=True)
            self._executor = None

    def __enter__(self) -> Self:
        """Enter the context manager and start the workers.

        Returns
        -------
            Self: The instance of the solver pool.

        """
        logger.debug("Entering solver pool context manager.")
        self.connect()
        return self

    def __exit__(
        self,
        exc_type: type[BaseException] | None,
        exc: BaseException | None,
        tb: TracebackType | None,
    ) -> None:
        """Exit the context manager and stop the workers.

        Args:
            exc_type (Optional[Type[BaseException]]): The exception type, if any.
            exc (Optional[BaseException]): The exception instance, if any.
            tb (Optional[TracebackType]): The traceback, if any.

        Returns:
            None

        """
        logger.debug("Exiting solver pool context manager.")
        self.close()

    def _payload(self, hypergraph: UniformHypergraph) -> dict[str, Any]:
        return {
            "n": hypergraph.n,
            "r": hypergraph.r,
            "edges": [list(edge) for edge in hypergraph.edges],
            "config": self.config.model_dump(mode="json"),
        }

    def _generate_cache_key(self, payload: dict[str, Any]) -> str:
        """Generate a unique cache key from the hypergraph and the solver settings.

        Args:
            payload (dict[str, Any]): The job payload.

        Returns:
            str: A unique cache key.

        """
        edges = ";".join(",".join(str(v) for v in edge) for edge in payload["edges"])
        settings = ":".join(f"{k}={v}" for k, v in sorted(payload["config"].items()))
        cache_key = f"lambda:n={payload['n']}:r={payload['r']}:{edges}:{settings}"
        logger.debug(f"Generated cache key: {cache_key[:120]}")
        return cache_key

    def _request(
        self,
        payloads: Sequence[dict[str, Any]],
        use_cache: bool = False,
    ) -> list[dict[str, Any]]:
        """Run job payloads with optional caching.

        Args:
            payloads (Sequence[dict[str, Any]]): The jobs.
            use_cache (bool): Whether to read and store results in the cache. Defaults to False.

        Returns:
            list[dict[str, Any]]: One response payload per job, in submission order.

        Raises:
        ------
            RuntimeError: If the pool has several workers and was never started.

        """
        if self.workers > 1 and not self._executor:
            msg = "Solver pool is not started. Use context manager (with) or connect()."
            raise RuntimeError(msg)

        responses: list[Optional[dict[str, Any]]] = [None] * len(payloads)
        keys: list[Optional[str]] = [None] * len(payloads)
        if use_cache:
            if self.cache is not None:
                for index, payload in enumerate(payloads):
                    keys[index] = self._generate_cache_key(payload)
                    cached = self.cache.get(keys[index])  # type: ignore[arg-type]
                    if cached is not None:
                        responses[index] = cached
                hits = sum(1 for response in responses if response is not None)
                logger.debug(f"Cache hits: {hits} of {len(payloads)}.")
            else:
                logger.warning(
                    "Can`t use cache cause no cache instance is set via the `cache` parameter or via `cache_config`. Solving uncached.",
                )

        pending = [index for index, response in enumerate(responses) if response is None]
        jobs = [payloads[index] for index in pending]
        logger.debug(f"Dispatching {len(jobs)} solves to {self.workers} worker(s).")
        if self._executor is not None:
            results = list(self._executor.map(solve_payload, jobs, chunksize=max(1, len(jobs) // (4 * self.workers))))
        else:
            results = [solve_payload(job) for job in jobs]

        for index, result in zip(pending, results):
            responses[index] = result
            key = keys[index]
            if use_cache and self.cache is not None and key and result.get("code") == 0:
                self.cache.set(key, result, ttl=self.default_cache_ttl)

        return [response for response in responses if response is not None]

    def _check_errors(self, data: dict[str, Any]) -> None:
        """Check a response payload for errors and raise the mapped exception.

        Args:
            data (dict[str, Any]): The response payload.

        Raises:
        ------
            exceptions.HyperfanError: If the payload carries a non-zero code.

        """
        if "code" not in data or data["code"] == 0:
            return  # No error

        logger.debug(f"Solver error detected. Code: {data['code']}, Message: {data.get('msg')}")
        raise exceptions.error_from_record(data)

    def solve(self, hypergraph: UniformHypergraph, use_cache: bool = False) -> PerronResult:
        """Solve one hypergraph.

        Args:
            hypergraph (UniformHypergraph): The hypergraph.
            use_cache (bool): Whether to use the result cache. Defaults to False.

        Returns:
            PerronResult: The solver result.

        Raises:
            exceptions.HyperfanError: If the solve fails.

        """
        (response,) = self._request([self._payload(hypergraph)], use_cache=use_cache)
        self._check_errors(response)
        return self.save_convert(response["result"], PerronResult)

    def solve_many(
        self,
        hypergraphs: Sequence[UniformHypergraph],
        use_cache: bool = False,
    ) -> list[PerronResult | exceptions.HyperfanError]:
        """Solve a batch, keeping failures in place instead of raising.

        Args:
            hypergraphs (Sequence[UniformHypergraph]): The hypergraphs.
            use_cache (bool): Whether to use the result cache. Defaults to False.

        Returns:
            list[PerronResult | HyperfanError]: One entry per input, in order.

        """
        responses = self._request([self._payload(h) for h in hypergraphs], use_cache=use_cache)
        out: list[PerronResult | exceptions.HyperfanError] = []
        for response in responses:
            try:
                self._check_errors(response)
                out.append(self.save_convert(response["result"], PerronResult))
            except exceptions.HyperfanError as e:
                logger.warning(f"Solve failed: {e}")
                out.append(e)
        return out

    def save_convert(self, data: dict[str, Any], pydantic_model: type[ModelT]) -> ModelT:
        """Convert a result payload to a specified Pydantic model.

        Args:
            data (dict[str, Any]): The data to be converted.
            pydantic_model (type[ModelT]): The Pydantic model class for conversion.

        Returns:
            ModelT: An instance of the provided Pydantic model.

        Raises:
            ConversionError: If conversion to the Pydantic model fails due to validation errors.

        """
        try:
            return pydantic_model.model_validate(data)
        except ValidationError as e:
            logger.warning(f"Failed to convert data: {e}.")
            logger.warning("Raising ConversionError with initial data.")
            raise exceptions.ConversionError(data, pydantic_model) from e
