from django.conf import settings
from django.urls import path, include
from django.contrib import admin

admin.site.site_title = f"{settings.PROJECT_NAME} Admin"
admin.site.site_header = f"{settings.PROJECT_NAME} Administration"

urlpatterns = [
    path('admin/', admin.site.urls),
    path('django-rq/', include('django_rq.urls')),
]
