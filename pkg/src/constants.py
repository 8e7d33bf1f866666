from os import path
import sys


app_version = "1.0.0"  # Any semver is fine
app_name = "Epsilon Embed"
app_description = "Decide L1 provability and check its embedding into modal logic K"
app_log_file = "epsilon-embed.log"

# Frozen builds keep res/ next to the executable.
if getattr(sys, "frozen", False):
    app_root = path.dirname(sys.executable)
else:
    app_root = path.dirname(path.dirname(path.abspath(__file__)))

res_folder = path.join(app_root, "res")
lang_folder = path.join(res_folder, "lang")
html_folder = path.join(res_folder, "html")

app_settings_file = "settings.json"

# ModelFile
model_file_version = 1

# Roundtrip
roundtrip_default_workers = 1
roundtrip_default_chunk_size = 64

# DepthOneOracle
depth1_max_variables = 4
