public class S000 extends Abstract0 {
    public void open() {
        log("trace");
        try {
            new S058();
            new Abstract16();
            send("msg1");
        } catch (IllegalStateException e) {
            new S060();
        } catch (TimeoutException e) {
            try {
                new S030();
            } catch (IllegalStateException e) {
                switch (event) {
                    case EV5:
                        send("msg3");
                        send("msg0");
                        break;
                    case EV0:
                        new S060();
                        break;
                }
                switch (event) {
                    case EV3:
                        new S084();
                        break;
                }
            }
            update();
            send("msg2");
        }
    }

    public void close() {
        update();
    }

    public void start() {
        update();
        new S067();
        switch (event) {
            case EV3:
                switch (event) {
                    case EV0:
                        try {
                            new S054();
                            log("trace");
                        } catch (IllegalStateException e) {
                            send("msg5");
                        } catch (IOException e) {
                            update();
                            send("msg3");
                            send("msg3");
                        } finally {
                            send("msg3");
                            log("trace");
                        }
                        break;
                    case EV5:
                        if (counter > 1) {
                            new S091();
                            new S047();
                            new S063();
                        }
                        new S047();
                        break;
                }
                switch (event) {
                    case EV1:
                        new S037();
                        send("msg1");
                        try {
                            send("msg6");
                            send("msg4");
                            send("msg4");
                        } finally {
                            log("trace");
                            log("trace");
                        }
                        break;
                    case EV4:
                        send("msg4");
                        break;
                    case EV0:
                        log("trace");
                        break;
                }
                break;
            case EV2:
                if (counter > 1) {
                    try {
                        new S049();
                        send("msg2");
                    } catch (IllegalStateException e) {
                        send("msg2");
                        send("msg3");
                    } finally {
                        new S091();
                        send("msg3");
                        new S031();
                    }
                    send("msg6");
                } else {
                    new S065();
                    if (counter > 1) {
                        send("msg2");
                    } else {
                        new S069();
                        send("msg4");
                    }
                    update();
                }
                break;
        }
    }

    public void stop() {
        try {
            new S031();
            log("trace");
            new S029();
        } finally {
            switch (event) {
                case EV1:
                    if (counter > 6) {
                        update();
                    } else {
                        new S039();
                        new S063();
                        new S085();
                    }
                    new S018();
                    switch (event) {
                        case EV1:
                            new S013();
                            break;
                    }
                    break;
                case EV2:
                    try {
                        update();
                        update();
                        new S041();
                    } finally {
                        new S056();
                    }
                    send("msg7");
                    break;
            }
            try {
                new S038();
                if (counter > 6) {
                    new S007();
                    update();
                    send("msg2");
                }
            } catch (IllegalStateException e) {
                send("msg4");
            }
            send("msg7");
        }
        new S057();
        send("msg6");
    }

    public void tick() {
        switch (event) {
            case EV3:
                log("trace");
                send("msg2");
                break;
            case EV1:
                switch (event) {
                    case EV1:
                        switch (event) {
                            case EV3:
                                new S024();
                                send("msg4");
                                send("msg4");
                                break;
                            case EV1:
                                send("msg2");
                                break;
                            case EV2:
                                send("msg6");
                                send("msg0");
                                send("msg1");
                                break;
                        }
                        new Abstract19();
                        update();
                        break;
                    case EV4:
                        if (counter > 7) {
                            send("msg7");
                            send("msg0");
                        } else {
                            new S050();
                            update();
                            new S065();
                        }
                        if (counter > 7) {
                            new S078();
                            send("msg1");
                            new S056();
                        }
                        try {
                            new S005();
                        } catch (IllegalStateException e) {
                            new S076();
                            send("msg7");
                            new Abstract4();
                        } catch (TimeoutException e) {
                            send("msg4");
                            update();
                        } finally {
                            new S042();
                            send("msg1");
                        }
                        break;
                }
                break;
            case EV5:
                send("msg4");
                send("msg4");
                new S097();
                break;
        }
        send("msg5");
        if (counter > 7) {
            log("trace");
            if (counter > 5) {
                switch (event) {
                    case EV4:
                        new S063();
                        break;
                }
            }
            if (counter > 6) {
                new S043();
                try {
                    send("msg4");
                } catch (IOException e) {
                    new S046();
                    new S086();
                }
            } else {
                send("msg1");
            }
        } else {
            new S021();
        }
    }

    public void reset() {
        new S099();
        new S061();
        try {
            switch (event) {
                case EV0:
                    send("msg6");
                    switch (event) {
                        case EV0:
                            new S023();
                            new S083();
                            new S077();
                            break;
                        case EV3:
                            log("trace");
                            send("msg3");
                            break;
                        case EV5:
                            new S015();
                            send("msg3");
                            break;
                    }
                    break;
            }
            send("msg3");
        } finally {
            log("trace");
            switch (event) {
                case EV4:
                    try {
                        send("msg0");
                    } catch (IllegalStateException e) {
                        send("msg4");
                        send("msg2");
                        send("msg7");
                    } finally {
                        new S020();
                        send("msg6");
                        send("msg6");
                    }
                    switch (event) {
                        case EV1:
                            send("msg5");
                            new S088();
                            break;
                        case EV5:
                            send("msg2");
                            break;
                    }
                    log("trace");
                    break;
                case EV5:
                    update();
                    send("msg0");
                    break;
                case EV1:
                    new S019();
                    if (counter > 1) {
                        new S014();
                        send("msg1");
                    }
                    new S031();
                    break;
            }
        }
    }

    public void pause() {
        send("msg5");
    }

    public void resume() {
        new S040();
    }

    public void load() {
        new S043();
        switch (event) {
            case EV5:
                new S057();
                new S089();
                break;
            case EV2:
                send("msg4");
                send("msg3");
                break;
        }
    }

    public void save() {
        log("trace");
        if (counter > 4) {
            new S009();
            try {
                new S045();
            } catch (TimeoutException e) {
                switch (event) {
                    case EV2:
                        send("msg0");
                        new S035();
                        break;
                    case EV3:
                        log("trace");
                        send("msg0");
                        break;
                    default:
                        send("msg6");
                        break;
                }
                if (counter > 9) {
                    new S092();
                    new S087();
                    new S011();
                }
                update();
            }
            switch (event) {
                case EV2:
                    if (counter > 8) {
                        send("msg5");
                        send("msg2");
                        send("msg5");
                    } else {
                        update();
                        new S066();
                        new S080();
                    }
                    break;
            }
        } else {
            update();
            switch (event) {
                case EV0:
                    log("trace");
                    switch (event) {
                        case EV4:
                            send("msg5");
                            break;
                        case EV2:
                            new Abstract3();
                            update();
                            send("msg4");
                            break;
                        default:
                            new S094();
                            break;
                    }
                    break;
                case EV4:
                    if (counter > 3) {
                        new S059();
                        send("msg2");
                        log("trace");
                    }
                    try {
                        send("msg3");
                    } finally {
                        send("msg4");
                    }
                    send("msg7");
                    break;
                case EV3:
                    new S014();
                    log("trace");
                    break;
                default:
                    send("msg2");
                    break;
            }
        }
        try {
            update();
            log("trace");
            new S041();
        } catch (IOException e) {
            if (counter > 2) {
                update();
                switch (event) {
                    case EV3:
                        send("msg2");
                        break;
                }
                switch (event) {
                    case EV5:
                        send("msg0");
                        send("msg6");
                        break;
                    case EV0:
                        new S030();
                        send("msg7");
                        break;
                }
            }
        } catch (TimeoutException e) {
            log("trace");
            log("trace");
            new S090();
        }
    }
}
