"""Exception hierarchy shared by every pipeline stage."""


class EntLinkError(Exception):
    """Base class for all errors raised by entlink."""


class DumpFormatError(EntLinkError):
    def __init__(self, path, line_no, reason):
        self.path = str(path)
        self.line_no = line_no
        self.reason = reason
        super().__init__(f"{self.path}:{line_no}: {reason}")


class DuplicateEntityError(DumpFormatError):
    def __init__(self, path, line_no, entity_id):
        self.entity_id = entity_id
        super().__init__(path, line_no, f"duplicate entity id {entity_id!r}")


class EntityNotFound(EntLinkError, KeyError):
    def __init__(self, entity_id):
        self.entity_id = entity_id
        super().__init__(entity_id)

    def __str__(self):
        return f"unknown entity id {self.entity_id!r}"


class InvalidQueryError(EntLinkError, ValueError):
    pass


class EmptyDocumentError(EntLinkError, ValueError):
    pass


class InsufficientDataError(EntLinkError, ValueError):
    pass


class IndexFormatError(EntLinkError):
    pass


class QueryTimeout(EntLinkError):
    def __init__(self, timeout_s, elapsed_s):
        self.timeout_s = timeout_s
        self.elapsed_s = elapsed_s
        super().__init__(f"deadline of {timeout_s}s exceeded after {elapsed_s:.6f}s")


class MissingGoldError(EntLinkError, KeyError):
    def __init__(self, query_ids):
        self.query_ids = sorted(query_ids)
        super().__init__(self.query_ids)

    def __str__(self):
        shown = ", ".join(self.query_ids[:5])
        more = f" (+{len(self.query_ids) - 5} more)" if len(self.query_ids) > 5 else ""
        return f"no gold label for query ids: {shown}{more}"


class ConfigError(EntLinkError, ValueError):
    pass
