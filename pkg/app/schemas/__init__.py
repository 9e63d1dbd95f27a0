# ============================================================================
# Schemas Package
# ============================================================================
from app.schemas.linalg import *
from app.schemas.system import *
from app.schemas.responses import *
