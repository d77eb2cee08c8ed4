"""
TwistCDC API - Main entry point
Serves face tracing, twists, facial diagrams, reductions and oracle sweeps over HTTP
"""
import logging

from dotenv import load_dotenv
from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware

# Load environment variables before config reads them
load_dotenv()

from src import config
from src.api.routes import embeddings, experiments, graphs, oracle, search

config.configure_logging()
logger = logging.getLogger(__name__)

# Initialize FastAPI
app = FastAPI(
    title="TwistCDC API",
    description="Signed embeddings of cubic graphs: faces, twists, facial diagrams and circular searches",
    version="1.0.0"
)

# CORS
app.add_middleware(
    CORSMiddleware,
    allow_origins=["http://localhost:5173", "http://localhost:3000"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


# Request logging middleware
@app.middleware("http")
async def log_requests(request: Request, call_next):
    logger.info(f"📥 {request.method} {request.url.path}")
    response = await call_next(request)
    logger.info(f"📤 Status: {response.status_code}")
    return response


# Include routers
app.include_router(graphs.router)
app.include_router(embeddings.router)
app.include_router(search.router)
app.include_router(oracle.router)
app.include_router(experiments.router)


# ============ HEALTH ============
@app.get("/")
def root():
    return {"status": "online", "service": "TwistCDC API", "version": "1.0.0"}


@app.get("/health")
def health():
    return {
        "status": "healthy",
        "reports_dir": str(config.REPORTS_DIR),
        "enumeration_cap": config.ENUMERATION_CAP,
        "search_cap": config.SEARCH_CAP,
    }


if __name__ == "__main__":
    import uvicorn
    print(f"\n🚀 TwistCDC API starting on port {config.PORT}")
    print(f"📚 Docs: http://localhost:{config.PORT}/docs")
    print(f"🗂️  Reports: {config.REPORTS_DIR}\n")
    uvicorn.run(app, host="0.0.0.0", port=config.PORT)
