# main.py
import uvicorn
import logging
from typing import Callable

from fastapi import Depends, FastAPI, HTTPException, Query, status

# Local module imports
import config
import report
from exceptions import InternalAssertion, ValidationError
from models import EmbedRequest, MomentRequest, MomentResponse, Report
from utils import parse_chart, parse_sigma, verify_token

# --- Logging Setup ---
logging.basicConfig(
    level=config.LOG_LEVEL,
    filename=config.LOG_FILE,
    format="%(asctime)s - %(levelname)s - %(message)s"
)

# --- FastAPI App Initialization ---
app = FastAPI(
    title="Grassmann Orbit Spaces",
    description="Exact computations on the torus action on G(n,2): strata, moment map, parameters and homology.",
    version="1.0.0"
)


def _serve(name: str, build: Callable):
    """Runs a report builder, mapping caller errors to 422 and broken invariants to 500."""
    try:
        return build()
    except ValidationError as e:
        logging.warning(f"{name}: rejected input: {e}")
        raise HTTPException(status.HTTP_422_UNPROCESSABLE_ENTITY, detail=str(e))
    except InternalAssertion as e:
        logging.exception(f"{name}: internal assertion failed")
        raise HTTPException(status.HTTP_500_INTERNAL_SERVER_ERROR, detail=str(e))
    except Exception:
        logging.exception("An unexpected error occurred")
        raise HTTPException(500, detail="Internal Server Error")


# --- API Endpoints ---
@app.get("/api/v1/strata", response_model=Report, summary="Enumerate the admissible sets of G(n,2)", dependencies=[Depends(verify_token)])
def get_strata(n: int = 5, summary: bool = False):
    logging.info(f"Strata request: n={n}, summary={summary}")
    return _serve("strata", lambda: report.strata_report(n, summary, f"GET /api/v1/strata?n={n}&summary={summary}"))


@app.get("/api/v1/polytopes", response_model=Report, summary="Admissible polytopes up to symmetry", dependencies=[Depends(verify_token)])
def get_polytopes(n: int = 5):
    return _serve("polytopes", lambda: report.polytopes_report(n, f"GET /api/v1/polytopes?n={n}"))


@app.get("/api/v1/fundamental", response_model=Report, summary="Fundamental strata and their orbit counts", dependencies=[Depends(verify_token)])
def get_fundamental(n: int = 5):
    return _serve("fundamental", lambda: report.fundamental_report(n, f"GET /api/v1/fundamental?n={n}"))


@app.post("/api/v1/moment", response_model=MomentResponse, summary="Moment image of a plane", dependencies=[Depends(verify_token)])
def post_moment(request: MomentRequest):
    """
    The plane is given by exactly one of:

    - **plucker**: a Plücker vector `{"n": 5, "coords": {"12": "1", ...}}`
    - **matrix**: an n x 2 matrix of Gaussian-rational literals
    - **sigma**: an admissible set, replaced by its representative plane
    """
    def build():
        p = report.resolve_plane(
            plucker=request.plucker.model_dump() if request.plucker else None,
            matrix=request.matrix,
            sigma=parse_sigma(request.sigma, request.n) if request.sigma is not None else None,
            n=request.n,
        )
        return report.moment_response(p)

    return _serve("moment", build)


@app.get("/api/v1/params/check-transitions", response_model=Report, summary="Check the chart-change calculus", dependencies=[Depends(verify_token)])
def get_check_transitions(samples: int = config.SAMPLES, seed: int = config.SEED):
    logging.info(f"Transition check requested: samples={samples}, seed={seed}")
    return _serve(
        "check-transitions",
        lambda: report.transitions_report(seed, samples, f"GET /api/v1/params/check-transitions?samples={samples}&seed={seed}"),
    )


@app.get("/api/v1/params/virtual", response_model=Report, summary="Virtual space of parameters of a stratum", dependencies=[Depends(verify_token)])
def get_virtual(sigma: str = Query(..., description="e.g. [[1,2],[1,3]] or 12,13"), chart: str = "12"):
    return _serve(
        "virtual",
        lambda: report.virtual_report(parse_sigma(sigma), parse_chart(chart), f"GET /api/v1/params/virtual?sigma={sigma}&chart={chart}"),
    )


@app.post("/api/v1/params/embed", response_model=Report, summary="Embed a point of the universal space into (CP^1)^5", dependencies=[Depends(verify_token)])
def post_embed(request: EmbedRequest):
    return _serve(
        "embed",
        lambda: report.embed_report(request.matrix, request.triple, request.direction, "POST /api/v1/params/embed"),
    )


@app.get("/api/v1/homology", response_model=Report, summary="Homology of an orbit space or curated complex", dependencies=[Depends(verify_token)])
def get_homology(space: str = "g52", coeff: str = "z"):
    logging.info(f"Homology request: space={space}, coeff={coeff}")
    return _serve("homology", lambda: report.homology_report(space, coeff, f"GET /api/v1/homology?space={space}&coeff={coeff}"))


@app.get("/api/v1/report-all", response_model=Report, summary="Run the acceptance suite", dependencies=[Depends(verify_token)])
def get_report_all(n: int = 5, seed: int = config.SEED, samples: int = config.SAMPLES):
    return _serve(
        "report-all",
        lambda: report.report_all(n, seed, samples, f"GET /api/v1/report-all?n={n}&seed={seed}&samples={samples}"),
    )


@app.get("/", summary="Health Check")
def read_root():
    """A simple health check endpoint."""
    return {"status": "ok", "message": "Orbit-space service is running."}


if __name__ == "__main__":
    uvicorn.run("main:app", host=config.API_HOST, port=config.API_PORT)
