import os
import sys
import logging

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "src"))

from fastapi import FastAPI  # noqa: E402
from fastapi.responses import JSONResponse  # noqa: E402
from pydantic import ValidationError  # noqa: E402
import uvicorn  # noqa: E402

from ncalg.errors import AlgebraError  # noqa: E402
from cli.commands import COMMANDS, CommandOptions, UsageError, run  # noqa: E402
from cli.expressions import ExpressionError  # noqa: E402

logging.basicConfig(level=os.getenv("LOG_LEVEL", "INFO"))
logger = logging.getLogger(__name__)

app = FastAPI(title="ncalg")


@app.get("/health")
def health_check():
    """Health check endpoint"""
    return {"status": "healthy", "message": "API is running"}


@app.get("/commands")
def list_commands():
    """Names of the commands accepted by /run/{command}"""
    return {"commands": list(COMMANDS)}


@app.post("/run/{command}")
def run_command(command: str, options: CommandOptions):
    """Run a command and return its structured report."""
    if command not in COMMANDS:
        return JSONResponse(status_code=404, content={"error": f"Unknown command: {command}"})
    try:
        report = run(command, options)
    except (UsageError, ExpressionError, ValidationError) as e:
        return JSONResponse(status_code=422, content={"error": str(e)})
    except AlgebraError as e:
        logger.error(f"{command} failed: {e}")
        return JSONResponse(status_code=400, content={"error": str(e)})
    except ValueError as e:
        return JSONResponse(status_code=422, content={"error": str(e)})
    return report.model_dump()


if __name__ == "__main__":
    port = int(os.getenv("API_PORT", 8080))
    uvicorn.run(app, host=os.getenv("API_HOST", "0.0.0.0"), port=port)
