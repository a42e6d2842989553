from .app import GcdIter, create_app
