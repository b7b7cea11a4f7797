from pathlib import Path

PACK_DIR = Path(__file__).resolve().parent

def get_data_dir():
    return PACK_DIR / 'data'

def get_cube_table():
    return get_data_dir() / 'cube_table.txt'
