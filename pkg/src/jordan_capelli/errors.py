class CapelliError(ValueError):
    """Error carrying a stable machine-readable code (used verbatim in CLI output)."""

    def __init__(self, code: str, detail: str = ""):
        super().__init__(f"{code}: {detail}" if detail else code)
        self.code = code
        self.detail = detail

    def to_json(self) -> dict:
        return {"error": self.code, "detail": self.detail}
