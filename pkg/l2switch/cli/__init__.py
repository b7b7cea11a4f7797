from .main import main, make_parser
