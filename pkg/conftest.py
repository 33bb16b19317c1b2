import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'refined_dj.settings')
django.setup()
